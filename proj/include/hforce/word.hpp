#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hforce {

// Error for malformed text input; carries the offending byte offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

enum class Parity { even, odd };

const char* to_string(Parity p);

// Finite binary word over {0,1}. Construction validates every symbol, so a
// Word always holds only '0'/'1' characters.
class Word {
public:
    Word() = default;
    explicit Word(std::string bits);

    static Word parse(std::string_view text) { return Word(std::string(text)); }

    const std::string& str() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    int bit(std::size_t i) const { return bits_[i] - '0'; }
    char operator[](std::size_t i) const { return bits_[i]; }

    Word rotated(std::size_t k) const;           // left rotation by k
    Word prefix(std::size_t length) const;
    Word suffix(std::size_t from) const;
    Word appended(char symbol) const;
    Word primitive_root() const;                 // shortest u with *this = u^j

    friend Word operator+(const Word& a, const Word& b);
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    struct Validated {};
    Word(std::string bits, Validated) : bits_(std::move(bits)) {}

    std::string bits_;
};

// Parity of the number of 1-symbols in w; the empty word is even.
Parity epsilon(const Word& w);

}  // namespace hforce
