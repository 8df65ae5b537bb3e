#include "udkdv/eigen.hpp"

#include <algorithm>
#include <stdexcept>

#include "udkdv/errors.hpp"
#include "udkdv/evolution.hpp"

namespace udkdv {

namespace {

/// Prefix sums of a state with clamped O(1) lookup at any index.
class SumTable {
  public:
    explicit SumTable(const State& s) : lo_(s.lo()), n_(s.cells().size()) {
        pre_.resize(n_ + 1);
        for (std::size_t k = 0; k < n_; ++k)
            pre_[k + 1] = pre_[k] + s.cells()[k];
    }

    /// sum_{j<i}
    const Rational& prefix(index_t i) const {
        if (n_ == 0 || i <= lo_)
            return pre_.front();
        const index_t k = i - lo_;
        if (k >= static_cast<index_t>(n_))
            return pre_.back();
        return pre_[static_cast<std::size_t>(k)];
    }

    /// sum_{j>=i}
    Rational suffix(index_t i) const { return pre_.back() - prefix(i); }

    const Rational& mass() const { return pre_.back(); }

  private:
    index_t lo_;
    std::size_t n_;
    std::vector<Rational> pre_;
};

struct Window {
    index_t lo;
    index_t hi;
};

Window joint_support(std::initializer_list<const State*> states) {
    Window w{0, 0};
    bool have = false;
    for (const State* s : states) {
        if (s->empty())
            continue;
        w.lo = have ? std::min(w.lo, s->lo()) : s->lo();
        w.hi = have ? std::max(w.hi, s->hi()) : s->hi();
        have = true;
    }
    return w;
}

/// Window wide enough that both basic solutions and their max/min
/// combinations are exactly affine beyond it: it covers the supports and
/// the crossings of the asymptotic lines at phase +- mass/kappa.
Window eigen_window(const State& s, const State& next, const State& prev, index_t t,
                    const SolitonParams& p) {
    Window w = joint_support({&s, &next, &prev});
    const Rational phase = p.phase_at(t);
    const Rational spread = total_mass(s) / p.kappa;
    const index_t k1 = floor(phase - abs(spread)).floor_index();
    const index_t k2 = ceil(phase + abs(spread)).floor_index();
    w.lo = std::min(w.lo, k1) - 3;
    w.hi = std::max(w.hi, k2) + 3;
    return w;
}

void require_valid_params(const State& s, const SolitonParams& p) {
    if (p.omega.sign() <= 0)
        throw PreconditionError("eigenfunction construction requires omega > 0");
    const Rational wmax = profile(s).omega_max;
    if (p.omega < wmax)
        throw MassTooSmallError("omega " + p.omega.str() + " below maximal soliton mass " + wmax.str());
}

} // namespace

SolitonParams::SolitonParams(Rational omega_, Rational phi_)
    : omega(std::move(omega_)), phi(std::move(phi_)), kappa(min(Rational(1), omega)),
      c(max(Rational(1), omega)) {
    if (omega.sign() < 0)
        throw PreconditionError("soliton mass must be nonnegative");
}

Rational Eigenfunction::at(index_t i) const {
    if (i < lo)
        return left_tail.at(i);
    if (i > hi())
        return right_tail.at(i);
    return values[static_cast<std::size_t>(i - lo)];
}

const Rational& Samples::at(index_t i) const {
    if (i < lo || i > hi())
        throw std::out_of_range("sample index out of range");
    return values[static_cast<std::size_t>(i - lo)];
}

BasicSolutions basic_solutions(const State& s, index_t t, const SolitonParams& p) {
    require_valid_params(s, p);
    const State next = update(s);
    const State prev = downdate(s);
    const Window w = joint_support({&s, &next, &prev});
    const SumTable cur_sum(s), prev_sum(prev);
    const Rational phase = p.phase_at(t);

    BasicSolutions out;
    out.lo = w.lo - 3;
    for (index_t i = out.lo; i <= w.hi + 3; ++i) {
        out.first.push_back(prev_sum.prefix(i));
        out.second.push_back(p.kappa * (Rational(i) - phase) + cur_sum.suffix(i));
    }
    return out;
}

index_t split_point(const State& s, index_t t, const SolitonParams& p) {
    require_valid_params(s, p);
    const State prev = downdate(s);
    const SumTable cur_sum(s), prev_sum(prev);
    const Rational phase = p.phase_at(t);
    const Rational spread = abs(cur_sum.mass() / p.kappa);
    const Window w = joint_support({&s, &prev});

    auto f = [&](index_t i) {
        return p.kappa * (Rational(i) - phase) + cur_sum.suffix(i) - prev_sum.prefix(i);
    };

    const index_t scan_lo = std::min(w.lo, ceil(phase - spread).floor_index() - 2);
    const index_t scan_hi = std::max(w.hi, ceil(phase + spread).floor_index() + 2);
    Rational prev_f = f(scan_lo);
    if (prev_f.sign() >= 0)
        throw InvariantError("split point scan started in the nonnegative range");
    for (index_t i = scan_lo + 1; i <= scan_hi; ++i) {
        const Rational cur_f = f(i);
        if (cur_f < prev_f)
            throw InvariantError("basic-solution difference not weakly increasing at i=" +
                                 std::to_string(i));
        if (cur_f.sign() >= 0)
            return i;
        prev_f = std::move(cur_f);
    }
    throw InvariantError("split point not found in scan window");
}

Eigenfunction generic_eigenfunction(const State& s, index_t t, const SolitonParams& p) {
    require_valid_params(s, p);
    const State next = update(s);
    const State prev = downdate(s);
    const Window w = eigen_window(s, next, prev, t, p);
    const SumTable cur_sum(s), prev_sum(prev);
    const Rational phase = p.phase_at(t);

    Eigenfunction e{p, EigenKind::generic, t, w.lo, {}, split_point(s, t, p),
                    AffineTail{0, 0}, AffineTail{p.kappa, -(p.kappa * phase)}};
    e.values.reserve(static_cast<std::size_t>(w.hi - w.lo + 1));
    for (index_t i = w.lo; i <= w.hi; ++i)
        e.values.push_back(
            max(prev_sum.prefix(i), p.kappa * (Rational(i) - phase) + cur_sum.suffix(i)));
    return e;
}

namespace {

Rational phase_formula(const SumTable& prev_sum, const SumTable& cur_sum, index_t m, index_t t,
                       const Rational& kappa_max, const Rational& c_max) {
    return Rational(m) - c_max * Rational(t) +
           (prev_sum.suffix(m) - cur_sum.prefix(m)) / kappa_max;
}

} // namespace

SolitonParams bound_params(const State& s, index_t t, int block_index) {
    const ConservedProfile p = profile(s);
    if (p.omega_max.sign() == 0)
        throw NoSolitonError("state has no soliton (omega_max = 0)");
    if (block_index < 0 || static_cast<std::size_t>(block_index) >= p.blocks.size())
        throw PreconditionError("block index " + std::to_string(block_index) + " out of range");
    const index_t m = p.blocks[static_cast<std::size_t>(block_index)].lo;

    const State next = update(s);
    const State prev = downdate(s);
    const Rational phi =
        phase_formula(SumTable(prev), SumTable(s), m, t, p.kappa_max, p.c_max);

    // The phase must come out the same when read off one step later.
    const ConservedProfile p1 = profile(next);
    if (p1.blocks.size() != p.blocks.size())
        throw InvariantError("maximal block count changed under update");
    const index_t m1 = p1.blocks[static_cast<std::size_t>(block_index)].lo;
    const Rational phi1 =
        phase_formula(SumTable(s), SumTable(next), m1, t + 1, p.kappa_max, p.c_max);
    if (phi1 != phi)
        throw InvariantError("bound-state phase not time-independent: " + phi.str() + " vs " +
                             phi1.str());
    return {p.omega_max, phi};
}

namespace {

Eigenfunction bound_slice(const State& cur, const State& prev, index_t t, const SolitonParams& p,
                          index_t split, const Window& w) {
    const SumTable cur_sum(cur), prev_sum(prev);
    const Rational phase = p.phase_at(t);
    Eigenfunction e{p,
                    EigenKind::bound,
                    t,
                    w.lo,
                    {},
                    split,
                    AffineTail{p.kappa, cur_sum.mass() - p.kappa * phase},
                    AffineTail{0, cur_sum.mass()}};
    e.values.reserve(static_cast<std::size_t>(w.hi - w.lo + 1));
    for (index_t i = w.lo; i <= w.hi; ++i)
        e.values.push_back(
            min(prev_sum.prefix(i), p.kappa * (Rational(i) - phase) + cur_sum.suffix(i)));
    return e;
}

} // namespace

std::pair<Eigenfunction, SolitonParams> bound_state(const State& s, index_t t, int block_index) {
    const SolitonParams p = bound_params(s, t, block_index);
    const ConservedProfile prof = profile(s);
    const State next = update(s);
    const State prev = downdate(s);
    const Window w = eigen_window(s, next, prev, t, p);
    const index_t m = prof.blocks[static_cast<std::size_t>(block_index)].lo;
    return {bound_slice(s, prev, t, p, m, w), p};
}

Eigenfunction advance(const State& s, const Eigenfunction& e) {
    const State next = update(s);
    if (e.kind == EigenKind::generic)
        return generic_eigenfunction(next, e.t + 1, e.params);
    const State next2 = update(next);
    const Window w = eigen_window(next, next2, s, e.t + 1, e.params);
    return bound_slice(next, s, e.t + 1, e.params, e.split, w);
}

Eigenfunction adjoint(const Eigenfunction& e) {
    const Rational wt = e.params.omega * Rational(e.t);
    Eigenfunction out = e;
    out.kind = e.kind == EigenKind::generic ? EigenKind::bound : EigenKind::generic;
    for (index_t i = e.lo; i <= e.hi(); ++i)
        out.values[static_cast<std::size_t>(i - e.lo)] = e.params.kappa * Rational(i) - wt - e.at(i);
    out.left_tail = {e.params.kappa - e.left_tail.slope, -wt - e.left_tail.intercept};
    out.right_tail = {e.params.kappa - e.right_tail.slope, -wt - e.right_tail.intercept};
    return out;
}

Samples squared_eigenfunction(const Eigenfunction& e) {
    if (e.kind != EigenKind::bound)
        throw KindMismatchError("squared eigenfunction requires a bound state");
    const Rational base = e.params.kappa * (e.params.c * Rational(e.t) + 1);
    Samples out;
    out.lo = e.lo - 2;
    for (index_t i = out.lo; i <= e.hi() + 2; ++i)
        out.values.push_back(e.at(i) + e.at(i - 1) + base - e.params.kappa * Rational(i));
    return out;
}

std::optional<LinearViolation> check_linear_system(const State& s, const Eigenfunction& phi_t,
                                                   const Eigenfunction& phi_t1) {
    const Rational& kappa = phi_t.params.kappa;
    const Rational& omega = phi_t.params.omega;
    const Rational one = 1;

    index_t lo = std::min(phi_t.lo, phi_t1.lo);
    index_t hi = std::max(phi_t.hi(), phi_t1.hi());
    if (!s.empty()) {
        lo = std::min(lo, s.lo());
        hi = std::max(hi, s.hi());
    }
    for (index_t i = lo - 2; i <= hi + 2; ++i) {
        const Rational rhs1 = max(s.at(i - 1) - one, -s.at(i));
        if (max(phi_t.at(i + 1) - kappa, phi_t.at(i - 1)) != phi_t.at(i) + rhs1)
            return LinearViolation{1, i};
        const Rational rhs2 = max(s.at(i) - one, -s.at(i - 1));
        if (max(phi_t1.at(i + 1) - kappa, phi_t1.at(i - 1)) != phi_t1.at(i) + rhs2)
            return LinearViolation{2, i};
        if (max(phi_t1.at(i + 1), phi_t.at(i + 1) + s.at(i) - one) != phi_t.at(i))
            return LinearViolation{3, i};
        if (max(phi_t.at(i) + kappa - omega, phi_t1.at(i) + s.at(i) + kappa - one) !=
            phi_t1.at(i + 1))
            return LinearViolation{4, i};
    }
    return std::nullopt;
}

bool verify_linear_system(const State& s, const Eigenfunction& phi_t, const Eigenfunction& phi_t1) {
    return !check_linear_system(s, phi_t, phi_t1).has_value();
}

} // namespace udkdv
