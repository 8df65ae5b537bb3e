#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udkdv/eigen.hpp"
#include "udkdv/state.hpp"

namespace udkdv {

/// Symbolic piecewise-linear expression in (i, t): affine terms
/// a*i + b*t + d combined by abs, max, min, sum and rational scaling.
/// Trees are immutable; structurally equal subtrees are shared, so
/// repeated dressings stay compact and evaluation is memoized per node.
class TExpr {
  public:
    enum class Kind { affine, abs, max, min, sum, scale };

    struct Node;
    using NodeP = std::shared_ptr<const Node>;

    struct Node {
        Kind kind;
        Rational a, b, d; // affine coefficients; scale factor lives in a
        std::vector<NodeP> kids;
    };

    /// Constant zero.
    TExpr();

    static TExpr affine(const Rational& a, const Rational& b, const Rational& d);
    static TExpr constant(const Rational& d) { return affine(0, 0, d); }
    static TExpr abs(const TExpr& e);
    static TExpr max(std::vector<TExpr> es);
    static TExpr min(std::vector<TExpr> es);
    static TExpr sum(std::vector<TExpr> es);
    static TExpr scale(const Rational& k, const TExpr& e);

    /// Exact evaluation at rational (i, t).
    Rational eval(const Rational& i, const Rational& t) const;

    /// Structural substitution t -> t + delta on the affine leaves.
    TExpr shifted_t(long delta) const;

    /// Parenthesized prefix text, e.g. (max (aff 1/2 -3/4 7) (abs (aff 1 -1 -9))).
    std::string str() const;
    static TExpr parse(std::string_view text);

    /// Distinct nodes reachable from the root (shared nodes counted once).
    std::size_t node_count() const;

    const NodeP& root() const { return root_; }
    friend bool operator==(const TExpr& x, const TExpr& y) { return x.root_ == y.root_; }

  private:
    explicit TExpr(NodeP n) : root_(std::move(n)) {}
    NodeP root_;
};

/// U^t_i = T^t_{i+1} + T^{t+1}_i - T^t_i - T^{t+1}_{i+1}, evaluable at
/// rational positions x as well (continuous profile between lattice sites).
Rational u_from_t(const TExpr& T, const Rational& x, const Rational& t);

/// One row of the induced state: values at integer i in [lo, hi] at time t.
std::vector<Rational> sample_row(const TExpr& T, index_t t, index_t lo, index_t hi);

/// T-function (1/2) sum_j |i - t - j| * B_j of a state that translates at
/// speed 1. Throws NotBackgroundError when local_sum_max(b) > 1.
TExpr background_t(const State& b);

/// Vertex-operator dressing: inserts a soliton (omega, phi) into T.
/// Validity requires omega at least the maximal soliton mass of the state
/// induced by T; that is the caller's contract.
TExpr dress_t(const TExpr& T, const SolitonParams& p);

struct BilinearViolation {
    index_t i;
    index_t t;
};

/// Checks T^{t+1}_{i+1} + T^{t-1}_i = max(T^t_{i+1} + T^t_i,
/// T^{t+1}_i + T^{t-1}_{i+1} - 1) on the grid.
std::optional<BilinearViolation> check_bilinear(const TExpr& T, index_t i_lo, index_t i_hi,
                                                index_t t_lo, index_t t_hi);

bool verify_bilinear(const TExpr& T, index_t i_lo, index_t i_hi, index_t t_lo, index_t t_hi);

/// Asymptotic values (Z-, Z+) of the discrete potential Z_i = T^t_i - T^{t+1}_i
/// read off at the window edges; verified independent of t. Their difference
/// is the total mass of the induced state.
std::pair<Rational, Rational> asymptotic_z(const TExpr& T, index_t t, index_t window_lo,
                                           index_t window_hi);

} // namespace udkdv
