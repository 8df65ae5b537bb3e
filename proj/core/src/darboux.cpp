#include "udkdv/darboux.hpp"

#include <algorithm>

#include "udkdv/errors.hpp"
#include "udkdv/evolution.hpp"

namespace udkdv {

namespace {

State combine(const State& s, const Eigenfunction& et, const Eigenfunction& et1) {
    index_t lo = std::min(et.lo, et1.lo);
    index_t hi = std::max(et.hi(), et1.hi());
    if (!s.empty()) {
        lo = std::min(lo, s.lo());
        hi = std::max(hi, s.hi());
    }
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 3));
    for (index_t i = lo - 1; i <= hi + 1; ++i)
        out.push_back(s.at(i) + et.at(i + 1) + et1.at(i) - et.at(i) - et1.at(i + 1));
    return State(lo - 1, std::move(out));
}

} // namespace

State darboux_transform(const State& s, const Eigenfunction& e) {
    return combine(s, e, advance(s, e));
}

State dress_state(const State& s, index_t t, const SolitonParams& p) {
    if (p.omega.sign() <= 0)
        throw PreconditionError("dressing requires omega > 0");
    const Eigenfunction et = generic_eigenfunction(s, t, p);
    const Eigenfunction et1 = generic_eigenfunction(update(s), t + 1, p);
    State out = combine(s, et, et1);
    if (total_mass(out) != total_mass(s) + p.omega)
        throw InvariantError("dressing did not add mass omega");
    return out;
}

std::pair<State, SolitonParams> undress_state(const State& s, index_t t, int block_index) {
    const ConservedProfile prof = profile(s);
    if (prof.omega_max.sign() == 0)
        throw NoSolitonError("state has no soliton (omega_max = 0)");
    if (block_index < 0 || static_cast<std::size_t>(block_index) >= prof.blocks.size())
        throw PreconditionError("block index " + std::to_string(block_index) + " out of range");
    const SolitonParams p = bound_params(s, t, block_index);
    const index_t m = prof.blocks[static_cast<std::size_t>(block_index)].lo;

    const State next = update(s);
    const State prev = downdate(s);
    index_t lo = s.empty() ? m : s.lo();
    index_t hi = s.empty() ? m : s.hi();
    for (const State* u : {&next, &prev}) {
        if (!u->empty()) {
            lo = std::min(lo, u->lo());
            hi = std::max(hi, u->hi());
        }
    }
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (index_t i = lo; i <= hi; ++i)
        out.push_back(i < m ? next.at(i) : prev.at(i));
    State result(lo, std::move(out));
    if (total_mass(result) != total_mass(s) - p.omega)
        throw InvariantError("undressing did not remove mass omega_max");
    return {std::move(result), p};
}

std::optional<IdentityViolation> check_dt_identity(const State& s, const Eigenfunction& e) {
    const Eigenfunction et1 = advance(s, e);
    const State transformed = combine(s, e, et1);
    const Rational one = 1;

    index_t lo = std::min(e.lo, et1.lo);
    index_t hi = std::max(e.hi(), et1.hi());
    for (const State* u : {&s, &transformed}) {
        if (!u->empty()) {
            lo = std::min(lo, u->lo());
            hi = std::max(hi, u->hi());
        }
    }
    for (index_t i = lo - 2; i <= hi + 2; ++i) {
        const Rational lhs = max(transformed.at(i - 1) - one, -transformed.at(i));
        const Rational rhs = Rational(2) * e.at(i) - e.at(i + 1) - e.at(i - 1) +
                             max(s.at(i - 1) - one, -s.at(i));
        if (lhs != rhs)
            return IdentityViolation{i};
    }
    return std::nullopt;
}

bool dt_identity_check(const State& s, const Eigenfunction& e) {
    return !check_dt_identity(s, e).has_value();
}

} // namespace udkdv
