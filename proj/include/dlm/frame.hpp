#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "dlm/signature.hpp"

namespace dlm {

struct RelationFlags {
  bool euclidean = true;
  bool transitive = true;
  bool serial = true;

  bool operator==(const RelationFlags&) const = default;
};

/// Frame properties of every agent relation plus observation consistency.
/// For action models obs_consistent reports the postcondition discipline.
struct FrameReport {
  std::map<AgentId, RelationFlags> agents;
  bool obs_consistent = true;
  bool non_empty = true;
  /// Verdict under the strictness the report was produced with.
  bool valid = true;

  [[nodiscard]] bool all_euclidean() const;
  [[nodiscard]] bool all_transitive() const;
  [[nodiscard]] bool all_serial() const;

  /// Same flags, ignoring the verdict.
  [[nodiscard]] bool same_flags(const FrameReport& other) const;
};

std::string describe(const FrameReport& r);

/// Hard structural failure: dangling world/event reference, unknown agent,
/// broken postcondition discipline.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dlm
