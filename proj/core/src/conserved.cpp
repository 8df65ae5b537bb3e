#include "udkdv/conserved.hpp"

#include <algorithm>
#include <sstream>

#include "udkdv/evolution.hpp"

namespace udkdv {

namespace {

struct Window {
    index_t lo = 0;
    index_t hi = -1;
    bool valid() const { return hi >= lo; }
};

Window joint_support(std::initializer_list<const State*> states) {
    Window w;
    bool have = false;
    for (const State* s : states) {
        if (s->empty())
            continue;
        w.lo = have ? std::min(w.lo, s->lo()) : s->lo();
        w.hi = have ? std::max(w.hi, s->hi()) : s->hi();
        have = true;
    }
    if (!have)
        w = {0, -1};
    return w;
}

} // namespace

ConservedProfile profile(const State& s) {
    ConservedProfile p;
    p.omega_max = 0;
    if (s.empty()) {
        p.kappa_max = 0;
        p.c_max = 1;
        return p;
    }
    const State next = update(s);
    const State prev = downdate(s);
    const Window w = joint_support({&s, &next, &prev});

    // X and Y over [lo, hi+1], zero at both ends, filled right to left.
    const std::size_t n = static_cast<std::size_t>(w.hi - w.lo + 2);
    std::vector<Rational> xs(n), ys(n);
    for (index_t i = w.hi; i >= w.lo; --i) {
        const std::size_t k = static_cast<std::size_t>(i - w.lo);
        xs[k] = xs[k + 1] + next.at(i) - prev.at(i);
        ys[k] = ys[k + 1] + s.at(i + 1) - prev.at(i);
    }
    for (const Rational& v : xs)
        p.omega_max = max(p.omega_max, v);
    p.kappa_max = min(Rational(1), p.omega_max);
    p.c_max = max(Rational(1), p.omega_max);

    if (p.omega_max.sign() > 0) {
        for (std::size_t k = 0; k < n;) {
            if (xs[k] == p.omega_max) {
                std::size_t e = k;
                while (e + 1 < n && xs[e + 1] == p.omega_max)
                    ++e;
                p.blocks.push_back({w.lo + static_cast<index_t>(k), w.lo + static_cast<index_t>(e)});
                k = e + 1;
            } else {
                ++k;
            }
        }
    }
    p.x = State(w.lo, std::move(xs));
    p.y = State(w.lo, std::move(ys));
    return p;
}

namespace {

Rational max_of(const State& seq) {
    Rational m = 0;
    for (const Rational& v : seq.cells())
        m = max(m, v);
    return m;
}

bool fail(std::string* out, const std::string& msg) {
    if (out)
        *out = msg;
    return false;
}

} // namespace

bool assert_profile_laws(const State& s, int steps, std::string* violation) {
    const ConservedProfile first = profile(s);
    const Rational omega0 = first.omega_max;
    const Rational max_y0 = max_of(first.y);
    const std::size_t block_count0 = first.blocks.size();

    State cur = s;
    for (int step = 0; step <= steps; ++step) {
        const ConservedProfile p = profile(cur);
        const State next = update(cur);
        const State prev = downdate(cur);
        std::ostringstream where;
        where << "step " << step << ": ";

        if (p.omega_max != omega0)
            return fail(violation, where.str() + "max X changed: " + p.omega_max.str() + " vs " + omega0.str());
        if (max_of(p.y) != max_y0)
            return fail(violation, where.str() + "max Y changed: " + max_of(p.y).str() + " vs " + max_y0.str());
        if (p.blocks.size() != block_count0)
            return fail(violation, where.str() + "block count changed");

        if (!p.x.empty()) {
            for (index_t i = p.x.lo() - 1; i <= p.x.hi(); ++i) {
                const Rational dx = p.x.at(i + 1) - p.x.at(i);
                if (dx.sign() > 0 && !(cur.at(i) + next.at(i) < p.kappa_max))
                    return fail(violation, where.str() + "increment law (forward) fails at i=" + std::to_string(i));
                if (dx.sign() < 0 && !(cur.at(i) + prev.at(i) < p.kappa_max))
                    return fail(violation, where.str() + "increment law (backward) fails at i=" + std::to_string(i));
            }
            for (index_t i = p.x.lo(); i <= p.x.hi(); ++i) {
                if (p.x.at(i) == p.omega_max && cur.at(i - 1) + prev.at(i - 1) != p.kappa_max)
                    return fail(violation, where.str() + "pair-sum identity fails at maximal i=" + std::to_string(i));
            }
        }
        cur = next;
    }
    return true;
}

} // namespace udkdv
