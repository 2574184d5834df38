#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dlm/signature.hpp"

namespace dlm {

class ActionModel;

/// An action model together with its designated event. The label is the
/// concrete syntax the action was written with ("tell+(a,p)", "@name") and is
/// what render() prints inside a dynamic modality.
struct PointedAction {
  std::shared_ptr<const ActionModel> model;
  std::size_t point = 0;
  std::string label;

  bool operator==(const PointedAction& other) const;
};

/// Immutable formula of the dynamic logic of misdirection. Only the core
/// constructors are stored; derived connectives expand on construction.
class Formula {
 public:
  enum class Kind { top, atom, negation, conjunction, belief, dynamic };

  /// The constant `true`.
  Formula();

  static Formula top() { return {}; }
  static Formula bottom();
  static Formula atom(Atom a);
  static Formula prop(PropId p);
  static Formula prop(const std::string& p) { return prop(PropId{p}); }
  static Formula obs(AgentId a, Literal l);
  static Formula literal(const Literal& l);
  static Formula negate(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula believes(AgentId a, Formula f);
  static Formula box(PointedAction action, Formula f);

  // Derived connectives expand to the core.
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula iff(Formula l, Formula r);
  static Formula believable(AgentId a, Formula f);
  static Formula diamond(PointedAction action, Formula f);

  /// Left-nested conjunction; `true` for an empty list.
  static Formula conj_all(const std::vector<Formula>& fs);
  /// Left-nested disjunction; `false` for an empty list.
  static Formula disj_all(const std::vector<Formula>& fs);

  [[nodiscard]] Kind kind() const;
  [[nodiscard]] const Atom& atom() const;
  [[nodiscard]] const AgentId& agent() const;
  [[nodiscard]] const PointedAction& action() const;
  /// Operand of negation, belief and dynamic nodes.
  [[nodiscard]] const Formula& operand() const;
  [[nodiscard]] const Formula& left() const;
  [[nodiscard]] const Formula& right() const;

  [[nodiscard]] bool is_top() const { return kind() == Kind::top; }
  [[nodiscard]] bool is_bottom() const;

  /// Number of nodes (action preconditions not included).
  [[nodiscard]] std::size_t size() const;

  bool operator==(const Formula& other) const;

 private:
  struct Node;
  static const std::shared_ptr<const Node>& top_node();
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Fully parenthesized concrete syntax; parse(render(f)) == f.
std::string render(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

/// True iff f contains no dynamic modality.
bool is_static(const Formula& f);

/// Atoms read when evaluating f, including those read by the preconditions
/// of every action model occurring in f.
std::set<Atom> atoms_read(const Formula& f);
/// Agents whose belief modality occurs in f (preconditions included).
std::set<AgentId> agents_used(const Formula& f);

/// If f is a conjunction of literals over distinct props, returns them in
/// left-to-right order.
std::optional<std::vector<Literal>> as_literal_conjunction(const Formula& f);

}  // namespace dlm
