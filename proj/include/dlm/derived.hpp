#pragma once

#include <string_view>
#include <vector>

#include "dlm/formula.hpp"

namespace dlm {

/// O_a l := obs(a,l) & B_a obs(a,l)
Formula epistemic_obs(const AgentId& a, const Literal& l);

/// O^S_b l := O_b l & \/_{a in actors} (<tell+_a(l)>B_b l | <show+_a(l)>B_b l).
/// Throws std::invalid_argument for an empty actor set.
Formula strong_epistemic_obs(const AgentId& b, const std::vector<AgentId>& actors, const Literal& l,
                             const Signature& sig);

/// B^S_b f := B_b f & \/_{a in actors} (<tell+_a(f)>B_b f | <show+_a(f)>B_b f).
/// The show disjunct is omitted unless f is a conjunction of literals.
Formula strong_belief(const AgentId& b, const std::vector<AgentId>& actors, const Formula& f,
                      const Signature& sig);

/// Sim_a ~p towards b:
///   (B_a p & <tell-_a(~p)>B_b ~p) | (obs(a,p) & <show-_a(~p)>obs(b,~p))
Formula sim(const AgentId& a, const AgentId& b, const PropId& p, const Signature& sig);

/// Simulation of a literal conjunction psi (the French Drop uses r & ~l):
///   (B_a /\~l & <tell-_a(psi)>B_b psi) | (/\obs(a,~l) & <show-_a(psi)> /\obs(b,l)).
/// For psi = ~p this is exactly sim(a,b,p).
Formula sim_literals(const AgentId& a, const AgentId& b, const std::vector<Literal>& payload,
                     const Signature& sig);

/// Dis_a p towards b:
///   (B_a p & B_b ~p & ~<tell+_a(p)>B_b ~p) | (obs(a,p) & obs(b,~p) & ~<show+_a(p)>obs(b,~p))
Formula dis(const AgentId& a, const AgentId& b, const PropId& p, const Signature& sig);

enum class SurpriseKind { mismatch, strong_mismatch, astonishment };

/// mismatch: ~B_a p & p; strong_mismatch: B_a ~p & p;
/// astonishment: p & ~B_a p & ~B_a ~p.
Formula surprise(SurpriseKind kind, const AgentId& a, const PropId& p);

/// "mismatch", "strong_mismatch", "astonishment".
SurpriseKind surprise_kind_from_string(std::string_view name);

/// Every registered agent except `agent`.
std::vector<AgentId> others(const Signature& sig, const AgentId& agent);

}  // namespace dlm
