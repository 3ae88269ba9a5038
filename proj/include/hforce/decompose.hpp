#pragma once

#include "hforce/nbt.hpp"
#include "hforce/star.hpp"

#include <optional>

namespace hforce {

// Left-associated chain of NBT factors whose star product is a given code.
struct NbtDecomposition {
    std::vector<NbtRational> factors;
};

// Star product over the factors' orbit codes.
OrbitCode chain_code(const NbtDecomposition& d);

// Searches for a representation of S as an iterated star product of NBT
// orbits, peeling the rightmost factor first. Deterministic: factorizations
// are tried by increasing outer period, outer tails 0 before 1; the first
// complete decomposition wins. Absent when S admits none.
std::optional<NbtDecomposition> decompose_into_nbt(const OrbitCode& s);

// Membership in the class of iterated NBT star products.
bool is_in_R(const OrbitCode& s);

}  // namespace hforce
