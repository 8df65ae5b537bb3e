#include "udkdv/state.hpp"

#include <sstream>

#include "udkdv/errors.hpp"

namespace udkdv {

namespace {
const Rational kZero = 0;
}

State::State(index_t origin, std::vector<Rational> cells) : origin_(origin), cells_(std::move(cells)) {
    std::size_t first = 0;
    while (first < cells_.size() && cells_[first].is_zero())
        ++first;
    if (first == cells_.size()) {
        cells_.clear();
        origin_ = 0;
        return;
    }
    std::size_t last = cells_.size();
    while (last > first && cells_[last - 1].is_zero())
        --last;
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(last), cells_.end());
    cells_.erase(cells_.begin(), cells_.begin() + static_cast<std::ptrdiff_t>(first));
    origin_ += static_cast<index_t>(first);
}

const Rational& State::at(index_t i) const {
    if (i < origin_ || i >= origin_ + static_cast<index_t>(cells_.size()))
        return kZero;
    return cells_[static_cast<std::size_t>(i - origin_)];
}

State State::shifted(index_t k) const {
    State s = *this;
    if (!s.cells_.empty())
        s.origin_ += k;
    return s;
}

State State::parse(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string tok;
    index_t origin = 1;
    std::vector<Rational> cells;
    bool first = true;
    while (in >> tok) {
        if (first && tok.size() > 1 && tok[0] == '@') {
            try {
                std::size_t used = 0;
                origin = std::stoll(tok.substr(1), &used);
                if (used != tok.size() - 1)
                    throw ParseError("bad origin token: '" + tok + "'");
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError("bad origin token: '" + tok + "'");
            }
            first = false;
            continue;
        }
        first = false;
        cells.push_back(Rational::parse(tok));
    }
    if (cells.empty())
        throw ParseError("empty state line");
    return State(origin, std::move(cells));
}

std::string State::str() const {
    if (empty())
        return "0";
    std::string out = "@" + std::to_string(origin_);
    for (const Rational& v : cells_) {
        out += ' ';
        out += v.str();
    }
    return out;
}

} // namespace udkdv
