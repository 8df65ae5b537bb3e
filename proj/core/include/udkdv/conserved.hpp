#pragma once

#include <string>
#include <vector>

#include "udkdv/state.hpp"

namespace udkdv {

/// Maximal run [lo, hi] of consecutive indices where X attains omega_max.
struct Block {
    index_t lo = 0;
    index_t hi = 0;
    friend bool operator==(const Block&, const Block&) = default;
};

/// Conserved-density data of a state: the sequences
///   X_i = sum_{j>=i}(U'_j - U''_j)   (U' one step forward, U'' one back)
///   Y_i = sum_{j>i} U_j - sum_{j>=i} U''_j
/// together with the maximal soliton mass omega_max = max X, the wave
/// number kappa_max = min(1, omega_max), the speed c_max = max(1, omega_max),
/// and the blocks where X is maximal (soliton locations).
struct ConservedProfile {
    State x;
    State y;
    Rational omega_max;
    Rational kappa_max;
    Rational c_max;
    std::vector<Block> blocks; // left to right; empty iff omega_max = 0
};

ConservedProfile profile(const State& s);

/// Evolves s over `steps` forward steps and checks, at every step, the
/// relations that are theorems of the evolution: conservation of max X and
/// max Y, the sign conditions on the increments of X, constancy of the
/// number of maximal blocks, and the pair-sum identity at every global
/// maximum of X. Returns false and fills `violation` on the first failure
/// (which would signal an implementation bug, not bad input).
bool assert_profile_laws(const State& s, int steps, std::string* violation = nullptr);

} // namespace udkdv
