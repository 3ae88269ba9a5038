#include "hforce/word.hpp"

#include <algorithm>

namespace hforce {

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Word::Word(std::string bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        const char c = bits_[i];
        if (c != '0' && c != '1')
            throw ParseError("invalid symbol '" + std::string(1, c) + "' at index " +
                                 std::to_string(i) + "; expected '0' or '1'",
                             i);
    }
}

Word Word::rotated(std::size_t k) const {
    if (bits_.empty()) return *this;
    k %= bits_.size();
    return Word(bits_.substr(k) + bits_.substr(0, k), Validated{});
}

Word Word::prefix(std::size_t length) const {
    return Word(bits_.substr(0, length), Validated{});
}

Word Word::suffix(std::size_t from) const {
    return Word(from >= bits_.size() ? std::string() : bits_.substr(from), Validated{});
}

Word Word::appended(char symbol) const {
    if (symbol != '0' && symbol != '1')
        throw ParseError("invalid symbol '" + std::string(1, symbol) + "'; expected '0' or '1'",
                         bits_.size());
    Word w(bits_, Validated{});
    w.bits_.push_back(symbol);
    return w;
}

Word Word::primitive_root() const {
    const std::size_t n = bits_.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = bits_[i] == bits_[i - d];
        if (periodic) return prefix(d);
    }
    return *this;
}

Word operator+(const Word& a, const Word& b) {
    return Word(a.bits_ + b.bits_, Word::Validated{});
}

Parity epsilon(const Word& w) {
    const auto ones = std::count(w.str().begin(), w.str().end(), '1');
    return ones % 2 == 0 ? Parity::even : Parity::odd;
}

}  // namespace hforce
