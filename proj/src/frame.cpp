#include "dlm/frame.hpp"

#include <sstream>

namespace dlm {

bool FrameReport::all_euclidean() const {
  for (const auto& [agent, flags] : agents) {
    if (!flags.euclidean) return false;
  }
  return true;
}

bool FrameReport::all_transitive() const {
  for (const auto& [agent, flags] : agents) {
    if (!flags.transitive) return false;
  }
  return true;
}

bool FrameReport::all_serial() const {
  for (const auto& [agent, flags] : agents) {
    if (!flags.serial) return false;
  }
  return true;
}

bool FrameReport::same_flags(const FrameReport& other) const {
  return agents == other.agents && obs_consistent == other.obs_consistent && non_empty == other.non_empty;
}

std::string describe(const FrameReport& r) {
  std::ostringstream os;
  os << (r.valid ? "valid" : "invalid");
  for (const auto& [agent, flags] : r.agents) {
    os << " " << agent.name << ":{euclidean=" << flags.euclidean << ",transitive=" << flags.transitive
       << ",serial=" << flags.serial << "}";
  }
  os << " obs_consistent=" << r.obs_consistent << " non_empty=" << r.non_empty;
  return os.str();
}

}  // namespace dlm
