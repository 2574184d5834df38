#pragma once

#include <string>

#include "dlm/formula.hpp"
#include "dlm/model.hpp"

namespace dlm {

/// Graphviz: worlds as circles labelled with their true atoms, the point as
/// a double circle, edges labelled with the agents sharing them.
std::string to_dot(const PointedModel& pm, const std::string& graph_name = "model");

/// Graphviz: events as boxes labelled with pre/post, the point doubled.
std::string to_dot(const PointedAction& pa, const std::string& graph_name = "action");

}  // namespace dlm
