#pragma once

#include <cstddef>

#include "dlm/formula.hpp"

namespace dlm {

/// Rewrites f into an equivalent static formula by applying the reduction
/// axioms innermost-first:
///   [A,e]p        <-> (pre(e) -> post(e)(p))
///   [A,e]~phi     <-> (pre(e) -> ~[A,e]phi)
///   [A,e](phi&psi) <-> ([A,e]phi & [A,e]psi)
///   [A,e]B_a phi  <-> (pre(e) -> /\ { B_a [A,f]phi | e ->_a f })
/// post(e)(p) is materialized as true, false or p. Copies of pre(e) placed
/// in the result are themselves translated; no boolean simplification.
Formula translate(const Formula& f);

/// Maximal nesting of dynamic modalities, counting nesting through action
/// preconditions.
std::size_t dynamic_depth(const Formula& f);

/// Optional clean-up: constant folding and double-negation removal.
Formula simplify(const Formula& f);

}  // namespace dlm
