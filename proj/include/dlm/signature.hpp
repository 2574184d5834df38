#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dlm {

/// Name of an agent. Agents are drawn from a finite registry (Signature).
struct AgentId {
  std::string name;

  auto operator<=>(const AgentId&) const = default;
};

/// Name of a propositional symbol.
struct PropId {
  std::string name;

  auto operator<=>(const PropId&) const = default;
};

/// A propositional literal: p or ~p.
struct Literal {
  PropId prop;
  bool positive = true;

  [[nodiscard]] Literal complement() const { return {prop, !positive}; }

  auto operator<=>(const Literal&) const = default;
};

/// Valuation-level symbol: either a propositional symbol p or an observation
/// atom obs(a,p) / obs(a,~p). An observation atom is an atom, not a compound.
struct Atom {
  enum class Kind { prop, obs };

  Kind kind = Kind::prop;
  AgentId agent;  // empty for propositional atoms
  PropId prop;
  bool positive = true;  // polarity of the observed literal

  static Atom of_prop(PropId p) { return {Kind::prop, {}, std::move(p), true}; }
  static Atom of_obs(AgentId a, Literal l) {
    return {Kind::obs, std::move(a), std::move(l.prop), l.positive};
  }

  [[nodiscard]] bool is_obs() const { return kind == Kind::obs; }
  [[nodiscard]] Literal literal() const { return {prop, positive}; }
  /// obs(a,p) <-> obs(a,~p); undefined for propositional atoms.
  [[nodiscard]] Atom partner() const { return {kind, agent, prop, !positive}; }

  auto operator<=>(const Atom&) const = default;
};

std::string to_string(const Literal& l);
/// Concrete syntax: "p", "obs(a,p)", "obs(a,~p)".
std::string to_string(const Atom& a);
std::ostream& operator<<(std::ostream& os, const Atom& a);

/// The finite agent and proposition registry a scenario is built over.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<AgentId> agents, std::vector<PropId> props);
  Signature(std::initializer_list<const char*> agents, std::initializer_list<const char*> props);

  [[nodiscard]] const std::vector<AgentId>& agents() const { return agents_; }
  [[nodiscard]] const std::vector<PropId>& props() const { return props_; }

  [[nodiscard]] std::optional<std::size_t> agent_index(const AgentId& a) const;
  [[nodiscard]] std::optional<std::size_t> prop_index(const PropId& p) const;
  [[nodiscard]] bool has_agent(const AgentId& a) const { return agent_index(a).has_value(); }
  [[nodiscard]] bool has_prop(const PropId& p) const { return prop_index(p).has_value(); }
  /// True iff the atom only mentions registered symbols.
  [[nodiscard]] bool covers(const Atom& a) const;

  /// Every atom over the signature: props first, then obs(a,p), obs(a,~p)
  /// per agent and prop.
  [[nodiscard]] std::vector<Atom> all_atoms() const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<AgentId> agents_;
  std::vector<PropId> props_;
};

}  // namespace dlm
