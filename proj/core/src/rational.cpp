#include "udkdv/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>

#include "udkdv/errors.hpp"

namespace udkdv {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw ParseError("rational with zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw std::domain_error("rational division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rational Rational::parse(std::string_view text) {
    // Accepted shapes: -?digits, optionally followed by /digits.
    auto fail = [&] { throw ParseError("bad rational: '" + std::string(text) + "'"); };
    if (text.empty())
        fail();
    std::size_t k = 0;
    if (text[k] == '-')
        ++k;
    std::size_t digits = 0;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
        ++k;
        ++digits;
    }
    if (digits == 0)
        fail();
    bool has_den = false;
    if (k < text.size()) {
        if (text[k] != '/')
            fail();
        ++k;
        std::size_t den_digits = 0;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
            ++k;
            ++den_digits;
        }
        if (den_digits == 0 || k != text.size())
            fail();
        has_den = true;
    }
    Rational r;
    const std::string buf(text);
    if (mpq_set_str(r.q_, buf.c_str(), 10) != 0)
        fail();
    if (has_den && mpz_sgn(mpq_denref(r.q_)) == 0)
        throw ParseError("rational with zero denominator: '" + buf + "'");
    mpq_canonicalize(r.q_);
    return r;
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    std::free(s);
    return out;
}

std::int64_t Rational::floor_index() const {
    mpz_t z;
    mpz_init(z);
    mpz_fdiv_q(z, mpq_numref(q_), mpq_denref(q_));
    if (!mpz_fits_slong_p(z)) {
        mpz_clear(z);
        throw std::overflow_error("rational floor does not fit an index");
    }
    const long v = mpz_get_si(z);
    mpz_clear(z);
    return v;
}

Rational floor(const Rational& a) {
    Rational r;
    mpz_fdiv_q(mpq_numref(r.q_), mpq_numref(a.q_), mpq_denref(a.q_));
    return r;
}

Rational ceil(const Rational& a) {
    Rational r;
    mpz_cdiv_q(mpq_numref(r.q_), mpq_numref(a.q_), mpq_denref(a.q_));
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

} // namespace udkdv
