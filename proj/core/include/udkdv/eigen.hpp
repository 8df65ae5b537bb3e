#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "udkdv/conserved.hpp"
#include "udkdv/state.hpp"

namespace udkdv {

/// Mass/phase pair of a soliton. kappa = min(1, omega) is the wave number,
/// c = max(1, omega) the speed; kappa * c = omega.
struct SolitonParams {
    Rational omega;
    Rational phi;
    Rational kappa;
    Rational c;

    SolitonParams(Rational omega_, Rational phi_);

    /// Time-dependent phase phi + c*t.
    Rational phase_at(index_t t) const { return phi + c * Rational(t); }

    friend bool operator==(const SolitonParams& a, const SolitonParams& b) {
        return a.omega == b.omega && a.phi == b.phi;
    }
};

enum class EigenKind { generic, bound };

/// One-sided affine description slope*i + intercept, valid outside the
/// sampled window of an eigenfunction.
struct AffineTail {
    Rational slope;
    Rational intercept;
    Rational at(index_t i) const { return slope * Rational(i) + intercept; }
};

/// A solution slice of the (max,+) linear system, sampled on a window wide
/// enough that the function is exactly affine beyond it.
struct Eigenfunction {
    SolitonParams params;
    EigenKind kind;
    index_t t; // time slice
    index_t lo;
    std::vector<Rational> values;
    index_t split; // m^t
    AffineTail left_tail;
    AffineTail right_tail;

    index_t hi() const { return lo + static_cast<index_t>(values.size()) - 1; }
    Rational at(index_t i) const;
};

/// Dense sample row with an explicit first index.
struct Samples {
    index_t lo = 0;
    std::vector<Rational> values;

    index_t hi() const { return lo + static_cast<index_t>(values.size()) - 1; }
    const Rational& at(index_t i) const;
};

struct BasicSolutions {
    index_t lo = 0;
    std::vector<Rational> first;  // sum_{j<i} U^{t-1}_j
    std::vector<Rational> second; // kappa*(i - phi - c*t) + sum_{j>=i} U^t_j
};

/// The two basic solutions of the linear system for state s at time t,
/// sampled over the joint support of s, update(s), downdate(s) plus three
/// cells each side. Requires p.omega >= omega_max(s) and p.omega > 0.
BasicSolutions basic_solutions(const State& s, index_t t, const SolitonParams& p);

/// Smallest index at which the difference F of the two basic solutions
/// attains its smallest nonnegative value. F is verified weakly increasing.
index_t split_point(const State& s, index_t t, const SolitonParams& p);

/// Max-combination of the two basic solutions: the generic (dressing)
/// eigenfunction, normalized to 0 on the left tail.
Eigenfunction generic_eigenfunction(const State& s, index_t t, const SolitonParams& p);

/// Mass/phase of the maximal soliton located by the chosen block of the
/// X-profile, anchored at time t. The phase is verified t-independent by
/// recomputing at t+1. Throws NoSolitonError when omega_max = 0.
SolitonParams bound_params(const State& s, index_t t, int block_index = 0);

/// Min-combination eigenfunction at omega = omega_max with phase
/// phi_max: the bound state that undresses the soliton of the chosen block.
std::pair<Eigenfunction, SolitonParams> bound_state(const State& s, index_t t, int block_index = 0);

/// The t+1 slice of an eigenfunction built for state s at time t.
Eigenfunction advance(const State& s, const Eigenfunction& e);

/// kappa*i - omega*t - Phi_i; swaps generic and bound kinds.
Eigenfunction adjoint(const Eigenfunction& e);

/// SE_i = Phi_i + Phi_{i-1} + kappa*(c*t + 1 - i) for a bound state; decays
/// linearly on both tails with slopes +kappa / -kappa.
Samples squared_eigenfunction(const Eigenfunction& e);

struct LinearViolation {
    int equation; // 1..4
    index_t i;
};

/// Checks all four max-equations of the linear system for the pair of
/// slices (Phi^t, Phi^{t+1}) against state s = U^t, over the whole window
/// including the affine tails. Returns the first violation, if any.
std::optional<LinearViolation> check_linear_system(const State& s, const Eigenfunction& phi_t,
                                                   const Eigenfunction& phi_t1);

bool verify_linear_system(const State& s, const Eigenfunction& phi_t, const Eigenfunction& phi_t1);

} // namespace udkdv
