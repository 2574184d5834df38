#pragma once

#include <string>
#include <vector>

#include "dlm/model.hpp"
#include "dlm/update.hpp"

namespace dlm {

/// Agents {a (magician), b (audience)}, props {l, r}.
Signature french_drop_signature();

/// Opening of the trick: w = {l, obs(a,l), obs(a,~r)} (actual),
/// v = {r, obs(a,r), obs(a,~l)}, u = {obs(a,~r), obs(a,~l)};
/// a sees only the actual world from each world, b considers all possible.
PointedModel french_drop_initial();

/// show-_a(r & ~l): the fake pass.
PointedAction french_drop_fake_pass();
/// show+_a(l & ~r): the reveal.
PointedAction french_drop_reveal();

/// The posterior-state formula evaluated at the opening:
///   l & obs(a,l) & obs(a,~r) & ~obs(a,r) & ~obs(b,r)
///   & <show-(a,r & ~l)>(obs(a,l) & obs(a,~r) & obs(b,r) & obs(b,~l)
///       & <show+(a,l & ~r)>(obs(b,l) & obs(b,~r)))
Formula french_drop_posterior();

struct ScenarioCheck {
  std::string stage;
  std::string formula;
  bool holds = false;
};

struct ScenarioReport {
  std::vector<PointedModel> stages;  // opening, after fake pass, after reveal
  std::vector<ScenarioCheck> checks;

  [[nodiscard]] bool ok() const;
  [[nodiscard]] const ScenarioCheck* first_failure() const;
};

/// Runs the whole trick and its golden assertions. Throws std::runtime_error
/// if an action is not executable.
ScenarioReport run_french_drop();

/// Two-world model where a is certain to observe p and b is unsure:
/// w = {p, obs(a,p)} (actual), v = {obs(a,~p), obs(b,~p)}.
PointedModel glance_model();
Signature glance_signature();

}  // namespace dlm
