#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace udkdv {

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; all arithmetic is closed and exact.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long n) { // NOLINT: implicit by design, 0/1 literals abound
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long num, long den);

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    /// Parses "p", "-p" or "p/q" (base 10). Throws ParseError on anything
    /// else, including zero denominators.
    static Rational parse(std::string_view text);

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    std::string str() const;

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    /// Floor as a machine integer; the value must fit in a signed long.
    std::int64_t floor_index() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) {
        Rational r;
        mpq_neg(r.q_, a.q_);
        return r;
    }

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& a) {
        Rational r;
        mpq_abs(r.q_, a.q_);
        return r;
    }
    friend Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
    friend Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

    /// Largest integer <= this, as a Rational.
    friend Rational floor(const Rational& a);
    /// Smallest integer >= this, as a Rational.
    friend Rational ceil(const Rational& a);
    /// Fractional part {x} = x - floor(x), in [0, 1).
    friend Rational frac(const Rational& a) { return a - floor(a); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& a);

  private:
    mpq_t q_;
};

} // namespace udkdv
