#pragma once

#include "hforce/orbit_code.hpp"

#include <span>

namespace hforce {

// Renormalization product P*Q: with A the first |P|-1 symbols of c_P, the
// product concatenates one A-block per symbol b of c_Q, tailed by b when the
// 1-count of A is even and by 1-b when it is odd. The result is validated as
// an orbit code; pairs whose product fails primitivity or maximality raise
// ValidationError carrying the witness.
OrbitCode star(const OrbitCode& p, const OrbitCode& q);

// Left-associated fold: P1*P2*...*Pk = (...((P1*P2)*P3)...).
OrbitCode star_chain(std::span<const OrbitCode> codes);

struct StarFactorization {
    Word prefix_body;                  // A, length outer_period - 1
    std::vector<int> tail_candidates;  // symbols t with A.t a valid code
    OrbitCode inner;                   // recovered Q
    std::size_t outer_period = 0;      // n
    std::size_t inner_period = 0;      // m
};

// Every nontrivial way to read c_S as a star product: for each divisor split
// |S| = n*m with n,m >= 2, the blocks of length n must share their first n-1
// symbols A, the word recovered from the block tails must itself be a code,
// and at least one of A.0, A.1 must be a code. Ordered by increasing n.
std::vector<StarFactorization> factorizations(const OrbitCode& s);

}  // namespace hforce
