#include "dlm/model.hpp"

#include <deque>
#include <set>
#include <sstream>

#include "dlm/action.hpp"
#include "dlm/update.hpp"

namespace dlm {

Model::Model(Signature sig, std::vector<std::string> worlds) : sig_(std::move(sig)), worlds_(std::move(worlds)) {
  std::set<std::string> seen;
  for (const auto& w : worlds_) {
    if (w.empty()) throw StructureError("empty world name");
    if (!seen.insert(w).second) throw StructureError("duplicate world '" + w + "'");
  }
  relations_.assign(sig_.agents().size(), std::vector<WorldSet>(worlds_.size(), WorldSet(worlds_.size())));
}

std::optional<std::size_t> Model::world_index(const std::string& name) const {
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (worlds_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Model::require_world(const std::string& name) const {
  auto w = world_index(name);
  if (!w) throw StructureError("reference to undeclared world '" + name + "'");
  return *w;
}

std::size_t Model::agent_slot(const AgentId& agent) const {
  auto slot = sig_.agent_index(agent);
  if (!slot) throw StructureError("unregistered agent '" + agent.name + "'");
  return *slot;
}

void Model::add_edge(const AgentId& agent, std::size_t from, std::size_t to) {
  if (from >= worlds_.size() || to >= worlds_.size()) throw StructureError("edge references an undeclared world");
  relations_[agent_slot(agent)][from].set(to);
}

void Model::add_edge(const AgentId& agent, const std::string& from, const std::string& to) {
  add_edge(agent, require_world(from), require_world(to));
}

void Model::set_atom(const Atom& atom, std::size_t w, bool value) {
  if (w >= worlds_.size()) throw StructureError("valuation references an undeclared world");
  if (!sig_.covers(atom)) throw StructureError("unregistered atom " + to_string(atom));
  auto it = valuation_.find(atom);
  if (it == valuation_.end()) {
    if (!value) return;
    it = valuation_.emplace(atom, WorldSet(worlds_.size())).first;
  }
  it->second.set(w, value);
  if (it->second.none()) valuation_.erase(it);
}

void Model::set_extension(const Atom& atom, WorldSet worlds) {
  if (worlds.size() != worlds_.size()) throw StructureError("extension size does not match the world count");
  if (!sig_.covers(atom)) throw StructureError("unregistered atom " + to_string(atom));
  if (worlds.none()) {
    valuation_.erase(atom);
  } else {
    valuation_[atom] = std::move(worlds);
  }
}

bool Model::holds(const Atom& atom, std::size_t w) const {
  auto it = valuation_.find(atom);
  return it != valuation_.end() && it->second.test(w);
}

WorldSet Model::extension(const Atom& atom) const {
  auto it = valuation_.find(atom);
  return it == valuation_.end() ? WorldSet(worlds_.size()) : it->second;
}

std::vector<Atom> Model::atoms_at(std::size_t w) const {
  std::vector<Atom> out;
  for (const auto& [atom, worlds] : valuation_) {
    if (worlds.test(w)) out.push_back(atom);
  }
  return out;
}

PointedModel point_at(Model m, const std::string& world) {
  const std::size_t w = m.require_world(world);
  return {std::move(m), w};
}

RelationFlags relation_flags(const std::vector<WorldSet>& successors) {
  RelationFlags flags;
  for (std::size_t w = 0; w < successors.size(); ++w) {
    const WorldSet& sw = successors[w];
    if (sw.none()) flags.serial = false;
    for (auto v = sw.find_first(); v != WorldSet::npos; v = sw.find_next(v)) {
      if (!successors[v].is_subset_of(sw)) flags.transitive = false;
      if (!sw.is_subset_of(successors[v])) flags.euclidean = false;
    }
  }
  return flags;
}

FrameReport validate(const Model& m, ModelStrictness strictness) {
  FrameReport report;
  for (const auto& [atom, worlds] : m.valuation()) {
    if (!m.signature().covers(atom)) throw StructureError("valuation mentions unregistered atom " + to_string(atom));
    if (atom.is_obs() && atom.positive) {
      auto partner = m.valuation().find(atom.partner());
      if (partner != m.valuation().end() && worlds.intersects(partner->second)) report.obs_consistent = false;
    }
  }
  report.non_empty = !m.empty();
  for (std::size_t slot = 0; slot < m.signature().agents().size(); ++slot) {
    std::vector<WorldSet> rel;
    rel.reserve(m.world_count());
    for (std::size_t w = 0; w < m.world_count(); ++w) rel.push_back(m.successors(slot, w));
    report.agents[m.signature().agents()[slot]] = relation_flags(rel);
  }
  report.valid = report.non_empty && report.obs_consistent;
  if (strictness == ModelStrictness::observational) {
    report.valid = report.valid && report.all_euclidean() && report.all_transitive() && report.all_serial();
  }
  return report;
}

namespace {

WorldSet box_extension(const Model& m, const PointedAction& pa, const Formula& body) {
  const Product prod = compute_product(m, *pa.model);
  const WorldSet inner = extension(prod.model, body);
  WorldSet out(m.world_count());
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    const std::size_t pw = prod.at(w, pa.point);
    out.set(w, pw == Product::npos || inner.test(pw));
  }
  return out;
}

}  // namespace

WorldSet extension(const Model& m, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::top:
      return WorldSet(m.world_count()).set();
    case K::atom:
      return m.extension(f.atom());
    case K::negation:
      return ~extension(m, f.operand());
    case K::conjunction: {
      WorldSet l = extension(m, f.left());
      if (l.none()) return l;
      return l & extension(m, f.right());
    }
    case K::belief: {
      const WorldSet inner = extension(m, f.operand());
      const std::size_t slot = m.agent_slot(f.agent());
      WorldSet out(m.world_count());
      for (std::size_t w = 0; w < m.world_count(); ++w) out.set(w, m.successors(slot, w).is_subset_of(inner));
      return out;
    }
    case K::dynamic:
      return box_extension(m, f.action(), f.operand());
  }
  return WorldSet(m.world_count());
}

bool satisfies(const Model& m, std::size_t w, const Formula& f) { return extension(m, f).test(w); }

bool satisfies(const PointedModel& pm, const Formula& f) { return satisfies(pm.model, pm.point, f); }

bool holds_everywhere(const Model& m, const Formula& f) { return extension(m, f).all(); }

PointedModel generated_submodel(const PointedModel& pm) {
  const Model& m = pm.model;
  const std::size_t agents = m.signature().agents().size();
  WorldSet reached(m.world_count());
  std::deque<std::size_t> queue{pm.point};
  reached.set(pm.point);
  while (!queue.empty()) {
    const std::size_t w = queue.front();
    queue.pop_front();
    for (std::size_t slot = 0; slot < agents; ++slot) {
      const WorldSet& succ = m.successors(slot, w);
      for (auto v = succ.find_first(); v != WorldSet::npos; v = succ.find_next(v)) {
        if (!reached.test(v)) {
          reached.set(v);
          queue.push_back(v);
        }
      }
    }
  }
  std::vector<std::size_t> keep;
  std::vector<std::string> names;
  for (auto w = reached.find_first(); w != WorldSet::npos; w = reached.find_next(w)) {
    keep.push_back(w);
    names.push_back(m.world_name(w));
  }
  Model sub(m.signature(), names);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      for (std::size_t slot = 0; slot < agents; ++slot) {
        if (m.successors(slot, keep[i]).test(keep[j])) sub.add_edge(m.signature().agents()[slot], i, j);
      }
    }
    for (const auto& atom : m.atoms_at(keep[i])) sub.set_atom(atom, i);
  }
  std::size_t point = 0;
  while (keep[point] != pm.point) ++point;
  return {std::move(sub), point};
}

namespace {

void trace_into(const Model& m, std::size_t w, const Formula& f, int depth, std::vector<TraceLine>& out) {
  using K = Formula::Kind;
  TraceLine line{depth, render(f), satisfies(m, w, f), {}};
  if (f.kind() == K::dynamic) {
    const PointedAction& pa = f.action();
    const Product prod = compute_product(m, *pa.model);
    const std::size_t pw = prod.at(w, pa.point);
    std::ostringstream note;
    note << "product has " << prod.model.world_count() << " worlds";
    if (!prod.model.empty()) line.product = PointedModel{prod.model, pw == Product::npos ? 0 : pw};
    if (pw == Product::npos) {
      note << "; pre(" << pa.model->event_name(pa.point) << ") fails at " << m.world_name(w) << ", box holds vacuously";
      line.note = note.str();
      out.push_back(std::move(line));
      return;
    }
    note << "; continuing at " << prod.model.world_name(pw);
    line.note = note.str();
    out.push_back(std::move(line));
    trace_into(prod.model, pw, f.operand(), depth + 1, out);
    return;
  }
  out.push_back(std::move(line));
  switch (f.kind()) {
    case K::negation:
      trace_into(m, w, f.operand(), depth + 1, out);
      break;
    case K::conjunction:
      trace_into(m, w, f.left(), depth + 1, out);
      trace_into(m, w, f.right(), depth + 1, out);
      break;
    case K::belief: {
      const WorldSet& succ = m.successors(f.agent(), w);
      for (auto v = succ.find_first(); v != WorldSet::npos; v = succ.find_next(v)) {
        const std::size_t first = out.size();
        trace_into(m, v, f.operand(), depth + 1, out);
        std::string& note = out[first].note;
        note = "at successor " + m.world_name(v) + (note.empty() ? "" : "; " + note);
      }
      break;
    }
    default:
      break;
  }
}

}  // namespace

std::vector<TraceLine> trace(const PointedModel& pm, const Formula& f) {
  std::vector<TraceLine> out;
  trace_into(pm.model, pm.point, f, 0, out);
  return out;
}

}  // namespace dlm
