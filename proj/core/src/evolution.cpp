#include "udkdv/evolution.hpp"

#include <algorithm>

namespace udkdv {

State update(const State& s) {
    if (s.empty())
        return {};
    std::vector<Rational> out;
    Rational carry = 0; // sum_{j<i}(U_j - U'_j)
    index_t i = s.lo();
    while (i <= s.hi() || !carry.is_zero()) {
        Rational v = min(Rational(1) - s.at(i), carry);
        carry += s.at(i) - v;
        out.push_back(std::move(v));
        ++i;
    }
    return State(s.lo(), std::move(out));
}

State downdate(const State& s) {
    if (s.empty())
        return {};
    std::vector<Rational> out;
    Rational carry = 0; // sum_{j>i}(U_j - U'_j)
    index_t i = s.hi();
    while (i >= s.lo() || !carry.is_zero()) {
        Rational v = min(Rational(1) - s.at(i), carry);
        carry += s.at(i) - v;
        out.push_back(std::move(v));
        --i;
    }
    std::reverse(out.begin(), out.end());
    return State(i + 1, std::move(out));
}

std::vector<Rational> r_cascade(std::vector<Rational> a) {
    const Rational one = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > one) {
            if (j + 1 == a.size())
                a.emplace_back(0);
            a[j + 1] += a[j] - one;
            a[j] = one;
        }
    }
    return a;
}

std::vector<Rational> l_cascade(std::vector<Rational> a) {
    const Rational one = 1;
    for (std::size_t j = a.size(); j-- > 0;) {
        if (a[j] > one) {
            if (j == 0) {
                a.insert(a.begin(), Rational(0));
                ++j;
            }
            a[j - 1] += a[j] - one;
            a[j] = one;
        }
    }
    return a;
}

State update_via_r(const State& s) {
    if (s.empty())
        return {};
    // a_i = U_{i-1} + U_i over [lo, hi+1]; the cascade may extend right.
    std::vector<Rational> a;
    for (index_t i = s.lo(); i <= s.hi() + 1; ++i)
        a.push_back(s.at(i - 1) + s.at(i));
    a = r_cascade(std::move(a));
    std::vector<Rational> out;
    out.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out.push_back(a[k] - s.at(s.lo() + static_cast<index_t>(k)));
    return State(s.lo(), std::move(out));
}

State downdate_via_l(const State& s) {
    if (s.empty())
        return {};
    // a_i = U_i + U_{i+1} over [lo-1, hi]; the cascade may extend left.
    std::vector<Rational> a;
    for (index_t i = s.lo() - 1; i <= s.hi(); ++i)
        a.push_back(s.at(i) + s.at(i + 1));
    const std::size_t before = a.size();
    a = l_cascade(std::move(a));
    const index_t start = s.lo() - 1 - static_cast<index_t>(a.size() - before);
    std::vector<Rational> out;
    out.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out.push_back(a[k] - s.at(start + static_cast<index_t>(k)));
    return State(start, std::move(out));
}

Rational total_mass(const State& s) {
    Rational m = 0;
    for (const Rational& v : s.cells())
        m += v;
    return m;
}

Rational local_sum_max(const State& s) {
    Rational v = 0; // attained against the zero tails
    if (s.empty())
        return v;
    for (index_t i = s.lo() - 1; i <= s.hi(); ++i)
        v = max(v, s.at(i) + s.at(i + 1));
    return v;
}

bool naive_check(const State& prev, const State& next) {
    if (prev.empty() && next.empty())
        return true;
    index_t lo = 0, hi = 0;
    bool have = false;
    for (const State* s : {&prev, &next}) {
        if (s->empty())
            continue;
        lo = have ? std::min(lo, s->lo()) : s->lo();
        hi = have ? std::max(hi, s->hi()) : s->hi();
        have = true;
    }
    const Rational one = 1;
    for (index_t i = lo - 2; i <= hi + 1; ++i) {
        const Rational lhs = max(next.at(i) - one, -next.at(i + 1));
        const Rational rhs = max(prev.at(i + 1) - one, -prev.at(i));
        if (lhs != rhs)
            return false;
    }
    return true;
}

} // namespace udkdv
