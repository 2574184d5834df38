#include "dlm/derived.hpp"

#include <stdexcept>

#include "dlm/action.hpp"

namespace dlm {

std::vector<AgentId> others(const Signature& sig, const AgentId& agent) {
  std::vector<AgentId> out;
  for (const auto& a : sig.agents()) {
    if (a != agent) out.push_back(a);
  }
  return out;
}

Formula epistemic_obs(const AgentId& a, const Literal& l) {
  Formula seen = Formula::obs(a, l);
  return Formula::conj(seen, Formula::believes(a, seen));
}

Formula strong_epistemic_obs(const AgentId& b, const std::vector<AgentId>& actors, const Literal& l,
                             const Signature& sig) {
  if (actors.empty()) throw std::invalid_argument("strong epistemic observation needs at least one actor");
  const Formula lit = Formula::literal(l);
  const Formula believed = Formula::believes(b, lit);
  std::vector<Formula> support;
  for (const auto& a : actors) {
    support.push_back(Formula::diamond(expand(ActionType::tell_plus(a, lit), sig), believed));
    support.push_back(Formula::diamond(expand(ActionType::show_plus(a, {l}), sig), believed));
  }
  return Formula::conj(epistemic_obs(b, l), Formula::disj_all(support));
}

Formula strong_belief(const AgentId& b, const std::vector<AgentId>& actors, const Formula& f, const Signature& sig) {
  const Formula believed = Formula::believes(b, f);
  const auto lits = as_literal_conjunction(f);
  std::vector<Formula> support;
  for (const auto& a : actors) {
    support.push_back(Formula::diamond(expand(ActionType::tell_plus(a, f), sig), believed));
    if (lits) support.push_back(Formula::diamond(expand(ActionType::show_plus(a, *lits), sig), believed));
  }
  return Formula::conj(believed, Formula::disj_all(support));
}

Formula sim_literals(const AgentId& a, const AgentId& b, const std::vector<Literal>& payload, const Signature& sig) {
  if (a == b) throw std::invalid_argument("simulation needs two distinct agents");
  std::vector<Formula> shown;
  std::vector<Formula> actual;
  std::vector<Formula> actor_sees;
  std::vector<Formula> target_sees;
  for (const auto& l : payload) {
    shown.push_back(Formula::literal(l));
    actual.push_back(Formula::literal(l.complement()));
    actor_sees.push_back(Formula::obs(a, l.complement()));
    target_sees.push_back(Formula::obs(b, l));
  }
  const Formula psi = Formula::conj_all(shown);
  const Formula verbal = Formula::conj(
      Formula::believes(a, Formula::conj_all(actual)),
      Formula::diamond(expand(ActionType::tell_minus(a, psi), sig), Formula::believes(b, psi)));
  const Formula visual = Formula::conj(Formula::conj_all(actor_sees),
                                       Formula::diamond(expand(ActionType::show_minus(a, payload), sig),
                                                        Formula::conj_all(target_sees)));
  return Formula::disj(verbal, visual);
}

Formula sim(const AgentId& a, const AgentId& b, const PropId& p, const Signature& sig) {
  return sim_literals(a, b, {Literal{p, false}}, sig);
}

Formula dis(const AgentId& a, const AgentId& b, const PropId& p, const Signature& sig) {
  if (a == b) throw std::invalid_argument("dissimulation needs two distinct agents");
  const Formula fact = Formula::prop(p);
  const Formula not_fact = Formula::negate(fact);
  const Formula b_disbelieves = Formula::believes(b, not_fact);
  const Formula b_sees_not = Formula::obs(b, {p, false});
  const Formula verbal = Formula::conj_all(
      {Formula::believes(a, fact), b_disbelieves,
       Formula::negate(Formula::diamond(expand(ActionType::tell_plus(a, fact), sig), b_disbelieves))});
  const Formula visual = Formula::conj_all(
      {Formula::obs(a, {p, true}), b_sees_not,
       Formula::negate(Formula::diamond(expand(ActionType::show_plus(a, {Literal{p, true}}), sig), b_sees_not))});
  return Formula::disj(verbal, visual);
}

Formula surprise(SurpriseKind kind, const AgentId& a, const PropId& p) {
  const Formula fact = Formula::prop(p);
  switch (kind) {
    case SurpriseKind::mismatch:
      return Formula::conj(Formula::negate(Formula::believes(a, fact)), fact);
    case SurpriseKind::strong_mismatch:
      return Formula::conj(Formula::believes(a, Formula::negate(fact)), fact);
    case SurpriseKind::astonishment:
      return Formula::conj_all({fact, Formula::negate(Formula::believes(a, fact)),
                                Formula::negate(Formula::believes(a, Formula::negate(fact)))});
  }
  throw std::invalid_argument("unknown surprise kind");
}

SurpriseKind surprise_kind_from_string(std::string_view name) {
  if (name == "mismatch") return SurpriseKind::mismatch;
  if (name == "strong_mismatch") return SurpriseKind::strong_mismatch;
  if (name == "astonishment") return SurpriseKind::astonishment;
  throw std::invalid_argument("unknown surprise kind '" + std::string(name) + "'");
}

}  // namespace dlm
