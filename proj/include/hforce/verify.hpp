#pragma once

#include "hforce/report.hpp"

#include <cstdint>

namespace hforce {

inline constexpr std::uint64_t kDefaultSeed = 1;

// Exhaustive lemma harnesses over all code pairs with |P| <= max_p and
// |Q| <= max_q (within each check's precondition). Pairs whose star product
// is not an orbit code are outside the hypotheses and counted as skipped.
Report verify_lemma5_range(int max_p = 5, int max_q = 4);
Report verify_lemma6_range(int max_p = 5, int max_q = 4);

// Set equality of structured and direct forced-set enumeration for all star
// products of NBT orbits with fractions in {1/3, 1/4, 2/5}, both tails on
// both factors.
Report verify_corollary_b(int max_period = 20);

// Wraps hall_order_check: passes when at least one uniform tail convention
// has no counterexample; per-convention outcomes land in notes.
Report verify_hall_order(int max_denominator = 20);

// Part one: seeded random star products (factor periods 2..6) must be
// recoverable by factorizations. Part two: every NBT chain of length <= 3
// with denominators <= 7 must decompose, and the decomposition must
// reproduce the chain's code.
Report verify_roundtrip(int samples = 200, std::uint64_t seed = kDefaultSeed);

// Total-order axioms of unimodal_cmp on seeded random eventually periodic
// triples, plus reflexivity (period <= 10), antisymmetry and transitivity
// (period <= 6) of the forcing relation on codes.
Report verify_order_axioms(int samples = 1000, std::uint64_t seed = kDefaultSeed);

}  // namespace hforce
