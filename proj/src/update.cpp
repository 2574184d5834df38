#include "dlm/update.hpp"

#include <set>

namespace dlm {

Product compute_product(const Model& m, const ActionModel& a) {
  const std::size_t nw = m.world_count();
  const std::size_t ne = a.event_count();

  std::vector<WorldSet> pre_holds;
  pre_holds.reserve(ne);
  for (std::size_t e = 0; e < ne; ++e) pre_holds.push_back(extension(m, a.pre(e)));

  Product prod;
  prod.event_count = ne;
  prod.index.assign(nw * ne, Product::npos);
  std::vector<std::string> names;
  for (std::size_t w = 0; w < nw; ++w) {
    for (std::size_t e = 0; e < ne; ++e) {
      if (!pre_holds[e].test(w)) continue;
      prod.index[w * ne + e] = prod.origin.size();
      prod.origin.emplace_back(w, e);
      names.push_back("(" + m.world_name(w) + "," + a.event_name(e) + ")");
    }
  }
  prod.model = Model(m.signature(), std::move(names));
  Model& out = prod.model;
  const std::size_t np = prod.origin.size();

  const auto& agents = m.signature().agents();
  for (std::size_t slot = 0; slot < agents.size(); ++slot) {
    const auto& event_succ = a.successors(agents[slot]);
    if (event_succ.empty()) continue;
    for (std::size_t i = 0; i < np; ++i) {
      const auto [w, e] = prod.origin[i];
      const WorldSet& world_succ = m.successors(slot, w);
      for (std::size_t f : event_succ[e]) {
        for (auto v = world_succ.find_first(); v != WorldSet::npos; v = world_succ.find_next(v)) {
          const std::size_t j = prod.at(v, f);
          if (j != Product::npos) out.add_edge(agents[slot], i, j);
        }
      }
    }
  }

  std::set<Atom> atoms;
  for (const auto& [atom, worlds] : m.valuation()) atoms.insert(atom);
  for (std::size_t e = 0; e < ne; ++e) {
    for (const auto& [atom, value] : a.post(e)) atoms.insert(atom);
  }
  for (const Atom& atom : atoms) {
    const WorldSet before = m.extension(atom);
    WorldSet after(np);
    for (std::size_t i = 0; i < np; ++i) {
      const auto [w, e] = prod.origin[i];
      const auto& post = a.post(e);
      auto assigned = post.find(atom);
      after.set(i, assigned == post.end() ? before.test(w) : assigned->second);
    }
    out.set_extension(atom, std::move(after));
  }
  return prod;
}

Model product(const Model& m, const ActionModel& a) { return compute_product(m, a).model; }

std::optional<PointedModel> apply(const PointedModel& pm, const PointedAction& pa) {
  if (!satisfies(pm, pa.model->pre(pa.point))) return std::nullopt;
  Product prod = compute_product(pm.model, *pa.model);
  const std::size_t point = prod.at(pm.point, pa.point);
  return PointedModel{std::move(prod.model), point};
}

std::pair<FrameReport, FrameReport> preservation_report(const Model& m, const ActionModel& a) {
  return {validate(m, ModelStrictness::relational), validate(product(m, a), ModelStrictness::relational)};
}

}  // namespace dlm
