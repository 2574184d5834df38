#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlm/formula.hpp"
#include "dlm/frame.hpp"

namespace dlm {

/// Finite assignment of truth values; atoms outside the map keep their value.
using PostMap = std::map<Atom, bool>;

/// Checks the postcondition discipline: obs(a,p) is assigned iff obs(a,~p)
/// is, and the two are never both assigned true. Returns the first violation.
std::optional<std::string> post_map_violation(const PostMap& post);

/// Action model with pre- and postconditions. Events are indexed 0..n-1.
class ActionModel {
 public:
  ActionModel() = default;
  explicit ActionModel(std::vector<std::string> events);

  [[nodiscard]] std::size_t event_count() const { return events_.size(); }
  [[nodiscard]] const std::vector<std::string>& events() const { return events_; }
  [[nodiscard]] const std::string& event_name(std::size_t e) const { return events_.at(e); }
  [[nodiscard]] std::optional<std::size_t> event_index(const std::string& name) const;

  void add_edge(const AgentId& agent, std::size_t from, std::size_t to);
  void set_pre(std::size_t e, Formula pre);
  /// Throws StructureError when the map breaks the postcondition discipline.
  void set_post(std::size_t e, PostMap post);

  [[nodiscard]] const Formula& pre(std::size_t e) const { return pre_.at(e); }
  [[nodiscard]] const PostMap& post(std::size_t e) const { return post_.at(e); }

  /// Successor lists of ->_agent; empty for agents without edges.
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& successors(const AgentId& agent) const;
  [[nodiscard]] const std::map<AgentId, std::vector<std::vector<std::size_t>>>& relations() const {
    return relations_;
  }

  bool operator==(const ActionModel& other) const;

 private:
  std::vector<std::string> events_;
  std::map<AgentId, std::vector<std::vector<std::size_t>>> relations_;
  std::vector<Formula> pre_;
  std::vector<PostMap> post_;
};

enum class ActionStrictness { strict, lenient };

/// Strict: every ->_a must be Euclidean, transitive and serial and the
/// postcondition discipline must hold. Lenient: only the discipline. A
/// discipline violation throws StructureError in both modes.
FrameReport validate_action(const ActionModel& a, const Signature& sig, ActionStrictness strictness);

/// One of the four misdirection action types.
struct ActionType {
  enum class Kind { tell_plus, tell_minus, show_plus, show_minus };

  Kind kind = Kind::tell_plus;
  AgentId actor;
  Formula content;                // tell payload
  std::vector<Literal> literals;  // show payload

  static ActionType tell_plus(AgentId actor, Formula f);
  static ActionType tell_minus(AgentId actor, Formula f);
  static ActionType show_plus(AgentId actor, std::vector<Literal> lits);
  static ActionType show_minus(AgentId actor, std::vector<Literal> lits);

  [[nodiscard]] bool is_show() const { return kind == Kind::show_plus || kind == Kind::show_minus; }

  bool operator==(const ActionType&) const = default;
};

/// Concrete syntax of the action, e.g. "show-(a,r & ~l)".
std::string render(const ActionType& t);

/// Builds the two-event pointed action model of the type. The audience is
/// every registered agent except the actor; events are named "e" (actual) and
/// "f". Throws std::invalid_argument for an unregistered actor, an empty
/// audience, or a show payload that is empty or repeats a prop.
PointedAction expand(const ActionType& t, const Signature& sig);

}  // namespace dlm
