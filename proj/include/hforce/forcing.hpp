#pragma once

#include "hforce/orbit_code.hpp"
#include "hforce/report.hpp"

#include <utility>

namespace hforce {

// P forces R at the symbolic level: every shift of R^inf is <=1 P^inf.
bool forces(const OrbitCode& p, const OrbitCode& r);

// All codes of period <= max_period forced by P, in canonical order.
std::vector<OrbitCode> forced_set_direct(const OrbitCode& p, int max_period,
                                         int cap = kDefaultEnumerationCap);

// The same set computed through the NBT chain of S: decompose S = P1*...*Pk,
// then union over j of { P1*...*P_{j-1} * R : Pj forces R }, each branch
// budgeted to max_period / (period of the prefix chain). Requires S to
// decompose; throws std::invalid_argument otherwise.
std::vector<OrbitCode> forced_set_structured(const OrbitCode& s, int max_period,
                                             int cap = kDefaultEnumerationCap);

struct ForcingPoset {
    std::vector<OrbitCode> nodes;  // canonical order
    std::vector<std::pair<std::size_t, std::size_t>> cover_edges;  // transitive reduction
};

// Forcing relation restricted to the given codes, transitively reduced.
ForcingPoset forcing_poset(std::vector<OrbitCode> codes);

// Checks, for T_M = (c_{P*Q})^inf and T_m its shift by |P|:
//   (a) even 1-count of A:  A0^inf <=1 T_m <=1 T_M <=1 A1^inf
//   (b) odd 1-count of A:   A1^inf <=1 T_m <=1 T_M <=1 A0^inf
//   (c) for i != j in 1..|P|-1 the shifts of T_M and T_m are ordered exactly
//       like the shifts of P^inf.
// The behaviour of (c) with index 0 included is recorded in notes only.
Report check_lemma5(const OrbitCode& p, const OrbitCode& q);

// Checks that for i != j in 0..|Q|-1 the shifts of (P*Q)^inf by i|P| and
// j|P| are ordered exactly like the shifts of Q^inf by i and j.
Report check_lemma6(const OrbitCode& p, const OrbitCode& q);

}  // namespace hforce
