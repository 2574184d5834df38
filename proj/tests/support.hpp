#pragma once

#include <random>
#include <string>
#include <vector>

#include "dlm/action.hpp"
#include "dlm/formula.hpp"
#include "dlm/model.hpp"

namespace dlm::testing {

/// Random formulas over a signature. Every generated dynamic modality uses one
/// of the four action types with a payload drawn from the signature.
class FormulaGen {
 public:
  FormulaGen(Signature sig, unsigned seed) : sig_(std::move(sig)), rng_(seed) {}

  /// Formula of modal depth <= depth and at most max_dyn nested dynamic
  /// modalities. max_dyn = 0 yields static formulas.
  Formula formula(int depth, int max_dyn) {
    const int choice = depth <= 0 ? 0 : pick(max_dyn > 0 ? 6 : 5);
    switch (choice) {
      case 0:
        return leaf();
      case 1:
        return Formula::negate(formula(depth - 1, max_dyn));
      case 2:
        return Formula::conj(formula(depth - 1, max_dyn), formula(depth - 1, max_dyn));
      case 3:
        return Formula::disj(formula(depth - 1, max_dyn), formula(depth - 1, max_dyn));
      case 4:
        return Formula::believes(agent(), formula(depth - 1, max_dyn));
      default: {
        const PointedAction act = action(0);
        Formula body = formula(depth - 1, max_dyn - 1);
        return pick(2) == 0 ? Formula::box(act, body) : Formula::diamond(act, body);
      }
    }
  }

  /// One of the four action types, expanded. Tell payloads are static formulas
  /// of depth <= tell_depth.
  PointedAction action(int tell_depth) {
    const AgentId a = agent();
    switch (pick(4)) {
      case 0:
        return expand(ActionType::tell_plus(a, tell_payload(tell_depth)), sig_);
      case 1:
        return expand(ActionType::tell_minus(a, tell_payload(tell_depth)), sig_);
      case 2:
        return expand(ActionType::show_plus(a, literals()), sig_);
      default:
        return expand(ActionType::show_minus(a, literals()), sig_);
    }
  }

  std::vector<Literal> literals() {
    std::vector<Literal> out;
    for (const auto& p : sig_.props()) {
      if (out.empty() || pick(2) == 0) out.push_back({p, pick(2) == 0});
    }
    std::shuffle(out.begin(), out.end(), rng_);
    return out;
  }

  Formula leaf() {
    const auto& props = sig_.props();
    const auto& agents = sig_.agents();
    switch (pick(6)) {
      case 0:
        return pick(2) == 0 ? Formula::top() : Formula::bottom();
      case 1:
      case 2:
        return Formula::prop(props[pick(props.size())]);
      default:
        return Formula::obs(agents[pick(agents.size())], {props[pick(props.size())], pick(2) == 0});
    }
  }

  AgentId agent() { return sig_.agents()[pick(sig_.agents().size())]; }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::mt19937& rng() { return rng_; }

 private:
  Formula tell_payload(int depth) {
    if (depth <= 0 || pick(2) == 0) {
      Formula l = leaf();
      return l.is_top() || l.is_bottom() ? Formula::prop(sig_.props()[0]) : l;
    }
    return formula(depth, 0);
  }

  Signature sig_;
  std::mt19937 rng_;
};

/// Frame properties recomputed pair-by-pair from an edge predicate, as an
/// oracle independent of the bitset implementation.
struct BruteFlags {
  bool euclidean = true;
  bool transitive = true;
  bool serial = true;
};

template <class Edge>
BruteFlags brute_flags(std::size_t n, Edge edge) {
  BruteFlags out;
  for (std::size_t x = 0; x < n; ++x) {
    bool has_succ = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (!edge(x, y)) continue;
      has_succ = true;
      for (std::size_t z = 0; z < n; ++z) {
        if (edge(x, z) && !edge(y, z)) out.euclidean = false;
        if (edge(y, z) && !edge(x, z)) out.transitive = false;
      }
    }
    if (!has_succ) out.serial = false;
  }
  return out;
}

inline BruteFlags brute_flags(const Model& m, const AgentId& a) {
  return brute_flags(m.world_count(), [&](std::size_t x, std::size_t y) { return m.successors(a, x).test(y); });
}

inline BruteFlags brute_flags(const ActionModel& act, const AgentId& a) {
  const auto& succ = act.successors(a);
  return brute_flags(act.event_count(), [&](std::size_t x, std::size_t y) {
    if (x >= succ.size()) return false;
    for (std::size_t s : succ[x]) {
      if (s == y) return true;
    }
    return false;
  });
}

}  // namespace dlm::testing
