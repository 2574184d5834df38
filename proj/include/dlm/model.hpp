#pragma once

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlm/formula.hpp"
#include "dlm/frame.hpp"

namespace dlm {

using WorldSet = boost::dynamic_bitset<>;

/// Relational model: worlds, one relation per registered agent, and a
/// valuation V : atoms -> sets of worlds. Atoms absent from V are false
/// everywhere.
class Model {
 public:
  Model() = default;
  Model(Signature sig, std::vector<std::string> worlds);

  [[nodiscard]] const Signature& signature() const { return sig_; }
  [[nodiscard]] std::size_t world_count() const { return worlds_.size(); }
  [[nodiscard]] bool empty() const { return worlds_.empty(); }
  [[nodiscard]] const std::vector<std::string>& worlds() const { return worlds_; }
  [[nodiscard]] const std::string& world_name(std::size_t w) const { return worlds_.at(w); }
  [[nodiscard]] std::optional<std::size_t> world_index(const std::string& name) const;
  /// Like world_index but throws StructureError for an undeclared world.
  [[nodiscard]] std::size_t require_world(const std::string& name) const;

  void add_edge(const AgentId& agent, std::size_t from, std::size_t to);
  void add_edge(const AgentId& agent, const std::string& from, const std::string& to);
  void set_atom(const Atom& atom, std::size_t w, bool value = true);
  void set_atom(const Atom& atom, const std::string& w, bool value = true) {
    set_atom(atom, require_world(w), value);
  }
  /// Replaces the whole extension of an atom.
  void set_extension(const Atom& atom, WorldSet worlds);

  [[nodiscard]] std::size_t agent_slot(const AgentId& agent) const;
  [[nodiscard]] const WorldSet& successors(const AgentId& agent, std::size_t w) const {
    return relations_[agent_slot(agent)][w];
  }
  [[nodiscard]] const WorldSet& successors(std::size_t agent_slot, std::size_t w) const {
    return relations_[agent_slot][w];
  }
  [[nodiscard]] bool holds(const Atom& atom, std::size_t w) const;
  /// V(atom); the empty set for atoms never made true.
  [[nodiscard]] WorldSet extension(const Atom& atom) const;
  [[nodiscard]] const std::map<Atom, WorldSet>& valuation() const { return valuation_; }
  /// Atoms true at w, in atom order.
  [[nodiscard]] std::vector<Atom> atoms_at(std::size_t w) const;

  bool operator==(const Model&) const = default;

 private:
  Signature sig_;
  std::vector<std::string> worlds_;
  std::vector<std::vector<WorldSet>> relations_;  // [agent slot][world]
  std::map<Atom, WorldSet> valuation_;
};

struct PointedModel {
  Model model;
  std::size_t point = 0;

  [[nodiscard]] const std::string& point_name() const { return model.world_name(point); }
};

/// Makes a pointed model, checking that the point is a declared world.
PointedModel point_at(Model m, const std::string& world);

enum class ModelStrictness {
  observational,  // Euclidean, transitive, serial, observation-consistent
  relational      // structure and observation consistency only
};

/// Frame flags of a relation over n worlds.
RelationFlags relation_flags(const std::vector<WorldSet>& successors);

FrameReport validate(const Model& m, ModelStrictness strictness);

/// Set of worlds where f holds (the truth set of f in m).
WorldSet extension(const Model& m, const Formula& f);

/// M,w |= f.
bool satisfies(const PointedModel& pm, const Formula& f);
bool satisfies(const Model& m, std::size_t w, const Formula& f);

/// f holds at every world of m.
bool holds_everywhere(const Model& m, const Formula& f);

/// Submodel generated by the worlds reachable from w (w included).
PointedModel generated_submodel(const PointedModel& pm);

/// Per-subformula evaluation record at the point, pre-order.
struct TraceLine {
  int depth = 0;
  std::string formula;
  bool value = false;
  std::string note;  // product summary for dynamic modalities
  /// For dynamic modalities: the updated model, pointed at (w,e) when the
  /// action is executable, otherwise at its first world (if any).
  std::optional<PointedModel> product;
};
std::vector<TraceLine> trace(const PointedModel& pm, const Formula& f);

}  // namespace dlm
