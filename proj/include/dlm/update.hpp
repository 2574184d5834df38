#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dlm/action.hpp"
#include "dlm/model.hpp"

namespace dlm {

/// M (x) A together with the (world, event) origin of each product world.
struct Product {
  Model model;
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  /// index[w * event_count + e] = product world of (w,e), or npos.
  std::vector<std::size_t> index;
  std::size_t event_count = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  [[nodiscard]] std::size_t at(std::size_t w, std::size_t e) const { return index[w * event_count + e]; }
};

/// Product update. Worlds are the pairs (w,e) with M,w |= pre(e), named
/// "(w,e)"; the result may have no worlds (check Model::empty()).
Product compute_product(const Model& m, const ActionModel& a);
Model product(const Model& m, const ActionModel& a);

/// ((M (x) A), (w,e)) when pre(e) holds at w, otherwise nullopt.
std::optional<PointedModel> apply(const PointedModel& pm, const PointedAction& pa);

/// Frame reports of m and m (x) a, both in relational strictness.
std::pair<FrameReport, FrameReport> preservation_report(const Model& m, const ActionModel& a);

}  // namespace dlm
