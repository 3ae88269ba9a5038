#pragma once

#include "hforce/orbit_code.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace hforce {

// Reduced rational strictly between 0 and 1/2, plus the tail symbol appended
// to its core word when forming the orbit code.
class NbtRational {
public:
    static NbtRational create(long long numerator, long long denominator, int tail);
    static NbtRational parse(std::string_view fraction, int tail);  // "m/n"

    long long numerator() const noexcept { return num_; }
    long long denominator() const noexcept { return den_; }
    int tail() const noexcept { return tail_; }

    std::string str() const;  // "m/n"

    bool operator==(const NbtRational&) const = default;

private:
    NbtRational(long long num, long long den, int tail)
        : num_(num), den_(den), tail_(tail) {}

    long long num_;
    long long den_;
    int tail_;
};

// Core word of the NBT orbit named by q = m/n: symbol i is 1 iff the segment
// from (0,0) to (n,m) crosses a horizontal integer line strictly inside
// (i-1, i+1). Decided with exact integer arithmetic. Palindromic, length n+1.
Word nbt_code(const NbtRational& q);

// nbt_code(q) followed by the tail symbol; period n+2.
OrbitCode nbt_orbit(const NbtRational& q);

// Inverse of nbt_orbit: strips the tail, rebuilds the candidate rational from
// the 1-count and regenerates the core word to confirm.
std::optional<NbtRational> recognize_nbt(const OrbitCode& c);

// All reduced m/n with n <= max_denominator, ordered by (n, m).
std::vector<NbtRational> nbt_rationals_upto(int max_denominator, int tail = 0);

struct HallConventionReport {
    int tail = 0;
    std::uint64_t checked = 0;
    std::optional<std::string> counterexample;  // first, in (n,m,n',m') order

    bool passed() const { return !counterexample.has_value(); }
};

struct HallOrderReport {
    int max_denominator = 0;
    std::array<HallConventionReport, 2> conventions{};

    bool any_passed() const {
        return conventions[0].passed() || conventions[1].passed();
    }
};

// For each uniform tail convention t, checks over all reduced pairs with
// denominators <= max_denominator that q <= q' iff (c_q t)^inf >=1 (c_q' t)^inf.
HallOrderReport hall_order_check(int max_denominator);

}  // namespace hforce
