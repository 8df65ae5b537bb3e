#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "udkdv/rational.hpp"

namespace udkdv {

using index_t = std::int64_t;

/// Finite-support sequence of rationals indexed over the integers:
/// cells()[k] holds the value at lo() + k, everything outside is zero.
/// The stored list is kept trimmed so its first and last entries are
/// nonzero; the trivial sequence is an empty list with origin 0.
class State {
  public:
    State() = default;
    State(index_t origin, std::vector<Rational> cells);

    /// Parses one whitespace-separated line of values, each an integer or
    /// p/q. An optional leading "@k" token sets the index of the first
    /// value (default 1). Throws ParseError.
    static State parse(std::string_view line);

    /// Canonical line form: "@lo v1 v2 ... vn", or "0" for the trivial
    /// state. Values in lowest terms.
    std::string str() const;

    bool empty() const { return cells_.empty(); }
    index_t lo() const { return origin_; }
    index_t hi() const { return origin_ + static_cast<index_t>(cells_.size()) - 1; }
    index_t support_size() const { return static_cast<index_t>(cells_.size()); }

    /// Value at arbitrary index; zero outside the stored window.
    const Rational& at(index_t i) const;

    const std::vector<Rational>& cells() const { return cells_; }

    State shifted(index_t k) const;

    friend bool operator==(const State& a, const State& b) = default;

  private:
    index_t origin_ = 0;
    std::vector<Rational> cells_;
};

} // namespace udkdv
