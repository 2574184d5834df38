#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "dlm/action.hpp"
#include "dlm/model.hpp"

namespace dlm {

enum class FrameClass {
  observational,         // Euclidean, transitive, serial
  euclidean_transitive,  // seriality dropped
  all                    // any relation
};

/// Desk-scale stand-in for "all pointed models". Valuations are always
/// observation-consistent.
struct Bounds {
  std::size_t max_worlds = 1;
  std::vector<AgentId> agents;
  std::vector<PropId> props;
  FrameClass frame_class = FrameClass::observational;
  /// Maximal number of pointed models an enumeration may visit.
  std::size_t budget = 0;
  /// When set, only these atoms vary; every other atom is false.
  std::optional<std::set<Atom>> atoms;

  [[nodiscard]] Signature signature() const { return {agents, props}; }
};

/// Budget from $DLM_BUDGET, else 200 million pointed models.
std::size_t default_budget();

Bounds make_bounds(std::size_t max_worlds, const Signature& sig, FrameClass frame_class);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t required, std::size_t budget);
  [[nodiscard]] std::size_t required() const { return required_; }
  [[nodiscard]] std::size_t budget() const { return budget_; }

 private:
  std::size_t required_;
  std::size_t budget_;
};

/// All relations over n worlds in the class, in canonical (bit-pattern) order.
std::vector<std::vector<WorldSet>> frames(std::size_t n, FrameClass frame_class);

/// Number of pointed models enumerate() would visit (saturating).
std::size_t count_pointed_models(const Bounds& bounds);

/// Visits every model up to max_worlds in canonical order: world count, then
/// relations (first agent slowest), then valuations. Worlds are w1..wn.
/// The visitor returns false to stop early. Throws BudgetExceeded up front.
void for_each_model(const Bounds& bounds, const std::function<bool(const Model&)>& visit);

/// As for_each_model, expanded to pointed models (points in world order).
void enumerate(const Bounds& bounds, const std::function<bool(const PointedModel&)>& visit);

struct ValidWithinBounds {};
struct Countermodel {
  PointedModel model;
};
using ValidityResult = std::variant<ValidWithinBounds, Countermodel>;

/// First pointed model (in enumeration order) falsifying f. Valuations range
/// over the atoms f reads; unread atoms are false. Throws BudgetExceeded, or
/// std::invalid_argument if f mentions symbols outside the bounds.
ValidityResult check_validity(const Formula& f, Bounds bounds);

/// First pointed model satisfying f, same enumeration as check_validity.
std::optional<PointedModel> find_witness(const Formula& f, Bounds bounds);

/// First (model, action) pair with a serial model whose product with the
/// action is not serial. Actions are tried in the given order per model.
std::optional<std::pair<PointedModel, PointedAction>> find_seriality_breaker(
    const Bounds& bounds, const std::vector<PointedAction>& actions);

std::string to_string(FrameClass c);
FrameClass frame_class_from_string(std::string_view name);

}  // namespace dlm
