#pragma once

#include <vector>

#include "udkdv/state.hpp"

namespace udkdv {

/// One forward time step: U'_i = min(1 - U_i, sum_{j<i}(U_j - U'_j)),
/// computed left to right. Total function; preserves total mass.
State update(const State& s);

/// One backward time step: U'_i = min(1 - U_i, sum_{j>i}(U_j - U'_j)),
/// computed right to left. Inverse of update.
State downdate(const State& s);

/// Cell-overflow cascade: excess above capacity 1 is pushed rightward,
/// one cell at a time, sweeping left to right. Sum-preserving and
/// idempotent; every output entry is <= 1.
std::vector<Rational> r_cascade(std::vector<Rational> a);

/// Mirror cascade pushing excess leftward, sweeping right to left.
std::vector<Rational> l_cascade(std::vector<Rational> a);

/// update computed through the R cascade applied to U_{i-1} + U_i.
State update_via_r(const State& s);

/// downdate computed through the L cascade applied to U_i + U_{i+1}.
State downdate_via_l(const State& s);

Rational total_mass(const State& s);

/// V = max_i (U_i + U_{i+1}); zero for the trivial state, and never
/// negative since the tails vanish.
Rational local_sum_max(const State& s);

/// Checks max(next_i - 1, -next_{i+1}) = max(prev_{i+1} - 1, -prev_i)
/// over the joint support. Holds whenever next = update(prev).
bool naive_check(const State& prev, const State& next);

} // namespace udkdv
