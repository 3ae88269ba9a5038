#include "hforce/decompose.hpp"

namespace hforce {

OrbitCode chain_code(const NbtDecomposition& d) {
    std::vector<OrbitCode> codes;
    codes.reserve(d.factors.size());
    for (const auto& q : d.factors) codes.push_back(nbt_orbit(q));
    return star_chain(codes);
}

std::optional<NbtDecomposition> decompose_into_nbt(const OrbitCode& s) {
    if (auto q = recognize_nbt(s)) return NbtDecomposition{{*q}};
    if (s.period() < 4) return std::nullopt;
    for (const auto& f : factorizations(s)) {
        const auto inner = recognize_nbt(f.inner);
        if (!inner) continue;
        for (const int t : f.tail_candidates) {  // candidates are ordered 0, 1
            const OrbitCode outer =
                OrbitCode::checked(f.prefix_body.appended(static_cast<char>('0' + t)));
            if (auto rest = decompose_into_nbt(outer)) {
                rest->factors.push_back(*inner);
                return rest;
            }
        }
    }
    return std::nullopt;
}

bool is_in_R(const OrbitCode& s) { return decompose_into_nbt(s).has_value(); }

}  // namespace hforce
