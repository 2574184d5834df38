#include "dlm/action.hpp"

#include <set>
#include <stdexcept>

#include "dlm/model.hpp"

namespace dlm {

std::optional<std::string> post_map_violation(const PostMap& post) {
  for (const auto& [atom, value] : post) {
    if (!atom.is_obs()) continue;
    auto partner = post.find(atom.partner());
    if (partner == post.end()) {
      return "postcondition assigns " + to_string(atom) + " but not " + to_string(atom.partner());
    }
    if (value && partner->second) {
      return "postcondition makes both " + to_string(atom) + " and " + to_string(atom.partner()) + " true";
    }
  }
  return std::nullopt;
}

ActionModel::ActionModel(std::vector<std::string> events)
    : events_(std::move(events)), pre_(events_.size()), post_(events_.size()) {
  if (events_.empty()) throw StructureError("action model without events");
  std::set<std::string> seen;
  for (const auto& e : events_) {
    if (!seen.insert(e).second) throw StructureError("duplicate event '" + e + "'");
  }
}

std::optional<std::size_t> ActionModel::event_index(const std::string& name) const {
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if (events_[i] == name) return i;
  }
  return std::nullopt;
}

void ActionModel::add_edge(const AgentId& agent, std::size_t from, std::size_t to) {
  if (from >= events_.size() || to >= events_.size()) throw StructureError("edge references an unknown event");
  auto& succ = relations_[agent];
  if (succ.empty()) succ.resize(events_.size());
  auto& list = succ[from];
  for (std::size_t t : list) {
    if (t == to) return;
  }
  list.push_back(to);
}

void ActionModel::set_pre(std::size_t e, Formula pre) { pre_.at(e) = std::move(pre); }

void ActionModel::set_post(std::size_t e, PostMap post) {
  if (auto violation = post_map_violation(post)) throw StructureError(*violation);
  post_.at(e) = std::move(post);
}

const std::vector<std::vector<std::size_t>>& ActionModel::successors(const AgentId& agent) const {
  static const std::vector<std::vector<std::size_t>> none;
  auto it = relations_.find(agent);
  return it == relations_.end() ? none : it->second;
}

bool ActionModel::operator==(const ActionModel& other) const {
  if (events_ != other.events_ || pre_ != other.pre_ || post_ != other.post_) return false;
  // Successor order is insertion order; compare as sets.
  auto as_sets = [](const ActionModel& a) {
    std::map<AgentId, std::set<std::pair<std::size_t, std::size_t>>> out;
    for (const auto& [agent, succ] : a.relations_) {
      auto& edges = out[agent];
      for (std::size_t e = 0; e < succ.size(); ++e) {
        for (std::size_t f : succ[e]) edges.emplace(e, f);
      }
      if (edges.empty()) out.erase(agent);
    }
    return out;
  };
  return as_sets(*this) == as_sets(other);
}

FrameReport validate_action(const ActionModel& a, const Signature& sig, ActionStrictness strictness) {
  FrameReport report;
  for (std::size_t e = 0; e < a.event_count(); ++e) {
    if (auto violation = post_map_violation(a.post(e))) throw StructureError(*violation);
    for (const auto& [atom, value] : a.post(e)) {
      if (!sig.covers(atom)) throw StructureError("postcondition mentions unregistered atom " + to_string(atom));
    }
  }
  for (const auto& [agent, succ] : a.relations()) {
    if (!sig.has_agent(agent)) throw StructureError("relation for unregistered agent '" + agent.name + "'");
  }
  report.non_empty = a.event_count() > 0;
  for (const auto& agent : sig.agents()) {
    std::vector<WorldSet> rel(a.event_count(), WorldSet(a.event_count()));
    const auto& succ = a.successors(agent);
    for (std::size_t e = 0; e < succ.size(); ++e) {
      for (std::size_t f : succ[e]) rel[e].set(f);
    }
    report.agents[agent] = relation_flags(rel);
  }
  report.valid = report.non_empty && report.obs_consistent;
  if (strictness == ActionStrictness::strict) {
    report.valid = report.valid && report.all_euclidean() && report.all_transitive() && report.all_serial();
  }
  return report;
}

ActionType ActionType::tell_plus(AgentId actor, Formula f) { return {Kind::tell_plus, std::move(actor), std::move(f), {}}; }

ActionType ActionType::tell_minus(AgentId actor, Formula f) {
  return {Kind::tell_minus, std::move(actor), std::move(f), {}};
}

ActionType ActionType::show_plus(AgentId actor, std::vector<Literal> lits) {
  return {Kind::show_plus, std::move(actor), Formula::top(), std::move(lits)};
}

ActionType ActionType::show_minus(AgentId actor, std::vector<Literal> lits) {
  return {Kind::show_minus, std::move(actor), Formula::top(), std::move(lits)};
}

std::string render(const ActionType& t) {
  using K = ActionType::Kind;
  std::string out;
  switch (t.kind) {
    case K::tell_plus:
      out = "tell+(";
      break;
    case K::tell_minus:
      out = "tell-(";
      break;
    case K::show_plus:
      out = "show+(";
      break;
    case K::show_minus:
      out = "show-(";
      break;
  }
  out += t.actor.name + ",";
  if (t.is_show()) {
    for (std::size_t i = 0; i < t.literals.size(); ++i) {
      if (i > 0) out += " & ";
      out += to_string(t.literals[i]);
    }
  } else {
    out += render(t.content);
  }
  return out + ")";
}

namespace {

constexpr std::size_t kActual = 0;
constexpr std::size_t kOther = 1;

void set_literal(PostMap& post, const Literal& l, bool value) { post[Atom::of_prop(l.prop)] = l.positive == value; }

/// obs(agent,l) := true, obs(agent,~l) := false.
void set_observation(PostMap& post, const AgentId& agent, const Literal& l) {
  post[Atom::of_obs(agent, l)] = true;
  post[Atom::of_obs(agent, l.complement())] = false;
}

PostMap show_plus_post(const std::vector<Literal>& lits, const std::vector<AgentId>& audience) {
  PostMap post;
  for (const auto& l : lits) {
    set_literal(post, l, true);
    for (const auto& b : audience) set_observation(post, b, l);
  }
  return post;
}

}  // namespace

PointedAction expand(const ActionType& t, const Signature& sig) {
  using K = ActionType::Kind;
  if (!sig.has_agent(t.actor)) throw std::invalid_argument("unknown actor '" + t.actor.name + "'");
  std::vector<AgentId> audience;
  for (const auto& agent : sig.agents()) {
    if (agent != t.actor) audience.push_back(agent);
  }
  if (audience.empty()) throw std::invalid_argument("action of '" + t.actor.name + "' has an empty audience");
  if (t.is_show()) {
    if (t.literals.empty()) throw std::invalid_argument("show action with an empty payload");
    std::set<PropId> props;
    for (const auto& l : t.literals) {
      if (!sig.has_prop(l.prop)) throw std::invalid_argument("unknown prop '" + l.prop.name + "'");
      if (!props.insert(l.prop).second) {
        throw std::invalid_argument("show payload repeats prop '" + l.prop.name + "'");
      }
    }
  }

  auto model = std::make_shared<ActionModel>(std::vector<std::string>{"e", "f"});
  const AgentId& a = t.actor;

  if (t.kind == K::show_minus) {
    model->add_edge(a, kActual, kActual);
    model->add_edge(a, kOther, kOther);
    model->add_edge(a, kOther, kActual);
  } else {
    for (std::size_t from : {kActual, kOther}) {
      for (std::size_t to : {kActual, kOther}) model->add_edge(a, from, to);
    }
  }
  for (const auto& b : audience) {
    model->add_edge(b, kActual, kOther);
    model->add_edge(b, kOther, kOther);
  }

  switch (t.kind) {
    case K::tell_plus:
    case K::tell_minus: {
      const Formula& phi = t.content;
      Formula believes_phi = Formula::believes(a, phi);
      if (t.kind == K::tell_plus) {
        model->set_pre(kActual, believes_phi);
      } else {
        const Formula negated = phi.kind() == Formula::Kind::negation ? phi.operand() : Formula::negate(phi);
        model->set_pre(kActual, Formula::believes(a, negated));
      }
      model->set_pre(kOther, Formula::conj(phi, believes_phi));
      break;
    }
    case K::show_plus: {
      std::vector<Formula> actual;
      std::vector<Formula> other;
      for (const auto& l : t.literals) actual.push_back(Formula::literal(l));
      for (const auto& l : t.literals) actual.push_back(Formula::obs(a, l));
      for (const auto& l : t.literals) other.push_back(Formula::negate(Formula::obs(a, l.complement())));
      model->set_pre(kActual, Formula::conj_all(actual));
      model->set_pre(kOther, Formula::conj_all(other));
      const PostMap post = show_plus_post(t.literals, audience);
      model->set_post(kActual, post);
      model->set_post(kOther, post);
      break;
    }
    case K::show_minus: {
      std::vector<Formula> actual;
      std::vector<Formula> other;
      for (const auto& l : t.literals) actual.push_back(Formula::literal(l.complement()));
      for (const auto& l : t.literals) actual.push_back(Formula::obs(a, l.complement()));
      for (const auto& l : t.literals) {
        for (const auto& b : audience) other.push_back(Formula::negate(Formula::obs(b, l.complement())));
      }
      model->set_pre(kActual, Formula::conj_all(actual));
      model->set_pre(kOther, Formula::conj_all(other));

      PostMap fake;
      PostMap seen;
      for (const auto& l : t.literals) {
        set_literal(fake, l, false);
        set_literal(seen, l, true);
        set_observation(seen, a, l);
        for (const auto& b : audience) {
          set_observation(fake, b, l);
          set_observation(seen, b, l);
        }
      }
      model->set_post(kActual, fake);
      model->set_post(kOther, seen);
      break;
    }
  }

  return PointedAction{std::move(model), kActual, render(t)};
}

}  // namespace dlm
