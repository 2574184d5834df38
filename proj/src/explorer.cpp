#include "dlm/explorer.hpp"

#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "dlm/update.hpp"

namespace dlm {

namespace {

constexpr std::size_t kMaxFrameBits = 25;  // n*n, brute-force relation filter

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return b > std::numeric_limits<std::size_t>::max() - a ? std::numeric_limits<std::size_t>::max() : a + b;
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

bool in_class(const RelationFlags& flags, FrameClass c) {
  switch (c) {
    case FrameClass::observational:
      return flags.euclidean && flags.transitive && flags.serial;
    case FrameClass::euclidean_transitive:
      return flags.euclidean && flags.transitive;
    case FrameClass::all:
      return true;
  }
  return false;
}

/// One independent valuation choice per world: a prop, or an observation
/// pair whose states are "neither", "positive" (if varying), "negative"
/// (if varying).
struct AtomGroup {
  std::vector<std::vector<Atom>> states;
};

std::vector<AtomGroup> atom_groups(const Bounds& bounds) {
  auto varies = [&](const Atom& a) { return !bounds.atoms || bounds.atoms->count(a) > 0; };
  std::vector<AtomGroup> groups;
  for (const auto& p : bounds.props) {
    const Atom atom = Atom::of_prop(p);
    if (varies(atom)) groups.push_back({{{}, {atom}}});
  }
  for (const auto& a : bounds.agents) {
    for (const auto& p : bounds.props) {
      const Atom pos = Atom::of_obs(a, {p, true});
      const Atom neg = Atom::of_obs(a, {p, false});
      AtomGroup g{{{}}};
      if (varies(pos)) g.states.push_back({pos});
      if (varies(neg)) g.states.push_back({neg});
      if (g.states.size() > 1) groups.push_back(std::move(g));
    }
  }
  return groups;
}

/// Every combination of group states, as the atom list true at one world.
std::vector<std::vector<Atom>> world_states(const std::vector<AtomGroup>& groups) {
  std::vector<std::vector<Atom>> out{{}};
  for (const auto& g : groups) {
    std::vector<std::vector<Atom>> next;
    next.reserve(out.size() * g.states.size());
    for (const auto& prefix : out) {
      for (const auto& state : g.states) {
        auto combined = prefix;
        combined.insert(combined.end(), state.begin(), state.end());
        next.push_back(std::move(combined));
      }
    }
    out = std::move(next);
  }
  return out;
}

void check_bounds(const Bounds& bounds) {
  if (bounds.max_worlds < 1) throw std::invalid_argument("max_worlds must be at least 1");
  if (bounds.max_worlds * bounds.max_worlds > kMaxFrameBits) {
    throw std::invalid_argument("max_worlds above 5 is not supported");
  }
  (void)bounds.signature();  // rejects duplicate names
}

}  // namespace

std::size_t default_budget() {
  if (const char* env = std::getenv("DLM_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("DLM_BUDGET is not a number: ") + env);
    }
  }
  return 200'000'000;
}

Bounds make_bounds(std::size_t max_worlds, const Signature& sig, FrameClass frame_class) {
  Bounds b;
  b.max_worlds = max_worlds;
  b.agents = sig.agents();
  b.props = sig.props();
  b.frame_class = frame_class;
  b.budget = default_budget();
  return b;
}

BudgetExceeded::BudgetExceeded(std::size_t required, std::size_t budget)
    : std::runtime_error("enumeration needs " + std::to_string(required) + " pointed models, budget is " +
                         std::to_string(budget)),
      required_(required),
      budget_(budget) {}

std::vector<std::vector<WorldSet>> frames(std::size_t n, FrameClass frame_class) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, FrameClass>, std::vector<std::vector<WorldSet>>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(n, frame_class);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::vector<std::vector<WorldSet>> out;
  const std::size_t bits = n * n;
  if (bits > kMaxFrameBits) throw std::invalid_argument("frame enumeration limited to 5 worlds");
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits); ++pattern) {
    std::vector<WorldSet> rel(n, WorldSet(n));
    for (std::size_t w = 0; w < n; ++w) {
      for (std::size_t v = 0; v < n; ++v) {
        if (pattern >> (w * n + v) & 1U) rel[w].set(v);
      }
    }
    if (in_class(relation_flags(rel), frame_class)) out.push_back(std::move(rel));
  }
  cache.emplace(key, out);
  return out;
}

std::size_t count_pointed_models(const Bounds& bounds) {
  check_bounds(bounds);
  const std::size_t per_world = world_states(atom_groups(bounds)).size();
  std::size_t total = 0;
  for (std::size_t n = 1; n <= bounds.max_worlds; ++n) {
    const std::size_t relations = saturating_pow(frames(n, bounds.frame_class).size(), bounds.agents.size());
    total = saturating_add(total, saturating_mul(saturating_mul(relations, saturating_pow(per_world, n)), n));
  }
  return total;
}

void for_each_model(const Bounds& bounds, const std::function<bool(const Model&)>& visit) {
  check_bounds(bounds);
  const std::size_t required = count_pointed_models(bounds);
  const std::size_t budget = bounds.budget == 0 ? default_budget() : bounds.budget;
  if (required > budget) throw BudgetExceeded(required, budget);

  const Signature sig = bounds.signature();
  const auto states = world_states(atom_groups(bounds));
  const std::size_t agents = bounds.agents.size();

  for (std::size_t n = 1; n <= bounds.max_worlds; ++n) {
    std::vector<std::string> names;
    for (std::size_t w = 0; w < n; ++w) names.push_back("w" + std::to_string(w + 1));
    const auto rels = frames(n, bounds.frame_class);
    if (rels.empty()) continue;

    // Odometer over one relation per agent, first agent slowest.
    std::vector<std::size_t> rel_choice(agents, 0);
    while (true) {
      Model frame(sig, names);
      for (std::size_t slot = 0; slot < agents; ++slot) {
        const auto& rel = rels[rel_choice[slot]];
        for (std::size_t w = 0; w < n; ++w) {
          for (auto v = rel[w].find_first(); v != WorldSet::npos; v = rel[w].find_next(v)) {
            frame.add_edge(bounds.agents[slot], w, v);
          }
        }
      }

      // Odometer over world states, w1 slowest.
      std::vector<std::size_t> val_choice(n, 0);
      while (true) {
        std::map<Atom, WorldSet> ext;
        for (std::size_t w = 0; w < n; ++w) {
          for (const Atom& atom : states[val_choice[w]]) {
            auto& set = ext[atom];
            if (set.size() != n) set.resize(n);
            set.set(w);
          }
        }
        Model m = frame;
        for (auto& [atom, set] : ext) m.set_extension(atom, std::move(set));
        if (!visit(m)) return;

        std::size_t pos = n;
        while (pos > 0 && ++val_choice[pos - 1] == states.size()) val_choice[--pos] = 0;
        if (pos == 0) break;
      }

      std::size_t pos = agents;
      while (pos > 0 && ++rel_choice[pos - 1] == rels.size()) rel_choice[--pos] = 0;
      if (pos == 0) break;
    }
  }
}

void enumerate(const Bounds& bounds, const std::function<bool(const PointedModel&)>& visit) {
  for_each_model(bounds, [&](const Model& m) {
    for (std::size_t w = 0; w < m.world_count(); ++w) {
      if (!visit(PointedModel{m, w})) return false;
    }
    return true;
  });
}

namespace {

Bounds restrict_to(const Formula& f, Bounds bounds) {
  const Signature sig = bounds.signature();
  std::set<Atom> atoms = atoms_read(f);
  for (const Atom& atom : atoms) {
    if (!sig.covers(atom)) throw std::invalid_argument("formula mentions " + to_string(atom) + " outside the bounds");
  }
  for (const AgentId& agent : agents_used(f)) {
    if (!sig.has_agent(agent)) throw std::invalid_argument("formula mentions agent '" + agent.name + "' outside the bounds");
  }
  if (bounds.atoms) {
    std::set<Atom> kept;
    for (const Atom& a : atoms) {
      if (bounds.atoms->count(a)) kept.insert(a);
    }
    atoms = std::move(kept);
  }
  bounds.atoms = std::move(atoms);
  return bounds;
}

}  // namespace

ValidityResult check_validity(const Formula& f, Bounds bounds) {
  std::optional<PointedModel> counter;
  for_each_model(restrict_to(f, std::move(bounds)), [&](const Model& m) {
    const WorldSet ext = extension(m, f);
    if (ext.all()) return true;
    std::size_t w = 0;
    while (ext.test(w)) ++w;
    counter = PointedModel{m, w};
    return false;
  });
  if (counter) return Countermodel{std::move(*counter)};
  return ValidWithinBounds{};
}

std::optional<PointedModel> find_witness(const Formula& f, Bounds bounds) {
  std::optional<PointedModel> witness;
  for_each_model(restrict_to(f, std::move(bounds)), [&](const Model& m) {
    const WorldSet ext = extension(m, f);
    if (ext.none()) return true;
    witness = PointedModel{m, ext.find_first()};
    return false;
  });
  return witness;
}

std::optional<std::pair<PointedModel, PointedAction>> find_seriality_breaker(
    const Bounds& bounds, const std::vector<PointedAction>& actions) {
  std::optional<std::pair<PointedModel, PointedAction>> found;
  for_each_model(bounds, [&](const Model& m) {
    if (!validate(m, ModelStrictness::relational).all_serial()) return true;
    for (const auto& pa : actions) {
      const Product prod = compute_product(m, *pa.model);
      if (prod.model.empty() || validate(prod.model, ModelStrictness::relational).all_serial()) continue;
      for (std::size_t w = 0; w < m.world_count(); ++w) {
        if (prod.at(w, pa.point) != Product::npos) {
          found.emplace(PointedModel{m, w}, pa);
          return false;
        }
      }
    }
    return true;
  });
  return found;
}

std::string to_string(FrameClass c) {
  switch (c) {
    case FrameClass::observational:
      return "observational";
    case FrameClass::euclidean_transitive:
      return "euclidean_transitive";
    case FrameClass::all:
      return "all";
  }
  return "?";
}

FrameClass frame_class_from_string(std::string_view name) {
  if (name == "observational") return FrameClass::observational;
  if (name == "euclidean_transitive") return FrameClass::euclidean_transitive;
  if (name == "all") return FrameClass::all;
  throw std::invalid_argument("unknown frame class '" + std::string(name) + "'");
}

}  // namespace dlm
