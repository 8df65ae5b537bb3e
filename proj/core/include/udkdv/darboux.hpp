#pragma once

#include <optional>
#include <utility>

#include "udkdv/eigen.hpp"
#include "udkdv/state.hpp"

namespace udkdv {

/// Adds a soliton (omega, phi) to the state by the Darboux combination
/// U_i + Theta^t_{i+1} + Theta^{t+1}_i - Theta^t_i - Theta^{t+1}_{i+1}
/// with generic eigenfunctions at t and t+1. Requires omega > 0 and
/// omega >= omega_max(s); the total mass grows by exactly omega.
State dress_state(const State& s, index_t t, const SolitonParams& p);

/// Removes the maximal-mass soliton located by the chosen block: the
/// update of s left of the split point joined to the downdate from it on.
/// Returns the new state and the (omega_max, phi_max) of the removed
/// soliton. Throws NoSolitonError when omega_max = 0.
std::pair<State, SolitonParams> undress_state(const State& s, index_t t, int block_index = 0);

/// Transformed state of the Darboux combination driven by eigenfunction e
/// (generic: dressing; bound: undressing).
State darboux_transform(const State& s, const Eigenfunction& e);

struct IdentityViolation {
    index_t i;
};

/// Checks max(U'_{i-1} - 1, -U'_i) =
///   2*Theta_i - Theta_{i+1} - Theta_{i-1} + max(U_{i-1} - 1, -U_i)
/// for the transformation driven by e, at every window index.
std::optional<IdentityViolation> check_dt_identity(const State& s, const Eigenfunction& e);

bool dt_identity_check(const State& s, const Eigenfunction& e);

} // namespace udkdv
