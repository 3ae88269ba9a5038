#include "hforce/forcing.hpp"

#include "hforce/decompose.hpp"
#include "hforce/star.hpp"

#include <algorithm>
#include <optional>

namespace hforce {

bool forces(const OrbitCode& p, const OrbitCode& r) {
    const auto ps = p.sequence();
    const auto rs = r.sequence();
    for (std::size_t i = 0; i < r.period(); ++i)
        if (unimodal_cmp(shift(rs, i), ps) == Ordering::greater) return false;
    return true;
}

std::vector<OrbitCode> forced_set_direct(const OrbitCode& p, int max_period, int cap) {
    std::vector<OrbitCode> out;
    for (const auto& candidate : enumerate_codes(max_period, cap))
        if (forces(p, candidate)) out.push_back(candidate);
    return out;
}

std::vector<OrbitCode> forced_set_structured(const OrbitCode& s, int max_period, int cap) {
    const auto decomposition = decompose_into_nbt(s);
    if (!decomposition)
        throw std::invalid_argument("code " + s.word().str() +
                                    " is not in R: no NBT decomposition exists");

    std::vector<OrbitCode> chain;
    chain.reserve(decomposition->factors.size());
    for (const auto& q : decomposition->factors) chain.push_back(nbt_orbit(q));

    std::vector<OrbitCode> result;
    std::optional<OrbitCode> prefix;  // P1*...*P_{j-1}
    long long prefix_period = 1;
    for (const auto& generator : chain) {
        const long long budget = static_cast<long long>(max_period) / prefix_period;
        if (budget >= 1) {
            for (const auto& r : forced_set_direct(generator, static_cast<int>(budget), cap))
                result.push_back(prefix ? star(*prefix, r) : r);
        }
        prefix = prefix ? star(*prefix, generator) : generator;
        prefix_period *= static_cast<long long>(generator.period());
    }
    canonical_sort_unique(result);
    return result;
}

ForcingPoset forcing_poset(std::vector<OrbitCode> codes) {
    canonical_sort_unique(codes);
    const std::size_t n = codes.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) rel[i][j] = forces(codes[i], codes[j]);

    ForcingPoset poset;
    poset.nodes = std::move(codes);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!rel[i][j]) continue;
            bool covered = false;
            for (std::size_t k = 0; k < n && !covered; ++k)
                covered = k != i && k != j && rel[i][k] && rel[k][j];
            if (!covered) poset.cover_edges.emplace_back(i, j);
        }
    }
    return poset;
}

namespace {

bool weakly_below(const EventuallyPeriodicSequence& x, const EventuallyPeriodicSequence& y) {
    return unimodal_cmp(x, y) != Ordering::greater;
}

std::vector<EventuallyPeriodicSequence> shifts_of(const EventuallyPeriodicSequence& s,
                                                  std::size_t count, std::size_t step = 1) {
    std::vector<EventuallyPeriodicSequence> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(shift(s, i * step));
    return out;
}

}  // namespace

Report check_lemma5(const OrbitCode& p, const OrbitCode& q) {
    const std::size_t n = p.period();
    if (n < 2) throw std::invalid_argument("lemma5 requires |P| >= 2");

    Report rep;
    const std::string pair_tag = "P=" + p.word().str() + " Q=" + q.word().str();
    rep.name = "lemma5(" + pair_tag + ")";

    const Word a = p.word().prefix(n - 1);
    const bool even = epsilon(a) == Parity::even;
    const OrbitCode pq = star(p, q);
    const auto t_max = pq.sequence();
    const auto t_min = shift(t_max, n);
    const EventuallyPeriodicSequence bound0(a, Word("0"));
    const EventuallyPeriodicSequence bound1(a, Word("1"));
    const auto& lo = even ? bound0 : bound1;
    const auto& hi = even ? bound1 : bound0;
    const char claim = even ? 'a' : 'b';

    const auto expect_le = [&](const EventuallyPeriodicSequence& x,
                               const EventuallyPeriodicSequence& y, const std::string& what) {
        ++rep.checked;
        if (!weakly_below(x, y))
            rep.failures.push_back(pair_tag + " claim (" + claim + "): " + what + " violated");
    };
    expect_le(lo, t_min, (even ? std::string("A0^inf <=1 T_m") : std::string("A1^inf <=1 T_m")));
    expect_le(t_min, t_max, "T_m <=1 T_M");
    expect_le(t_max, hi, (even ? std::string("T_M <=1 A1^inf") : std::string("T_M <=1 A0^inf")));

    const auto p_shifts = shifts_of(p.sequence(), n);
    const auto max_shifts = shifts_of(t_max, n);
    const auto min_shifts = shifts_of(t_min, n);

    // Distinct shifts of a primitive code never coincide; a tie would make
    // the order comparisons below meaningless, so it is reported as failure.
    const auto ordered_like_p = [&](std::size_t i, std::size_t j) {
        if (unimodal_cmp(p_shifts[i], p_shifts[j]) == Ordering::equal)
            rep.failures.push_back(pair_tag + ": unexpected tie between shifts " +
                                   std::to_string(i) + " and " + std::to_string(j) + " of P");
        const bool lhs = weakly_below(p_shifts[i], p_shifts[j]);
        const bool rhs = weakly_below(max_shifts[i], max_shifts[j]) &&
                         weakly_below(min_shifts[i], min_shifts[j]);
        return lhs == rhs;
    };

    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            if (i == j) continue;
            ++rep.checked;
            if (!ordered_like_p(i, j))
                rep.failures.push_back(pair_tag + " claim (c): shift pair i=" + std::to_string(i) +
                                       " j=" + std::to_string(j) +
                                       " of the product is not ordered like P");
        }
    }

    // Index 0 sits outside the stated range; its behaviour is recorded only.
    std::size_t zero_held = 0;
    std::size_t zero_total = 0;
    for (std::size_t j = 1; j < n; ++j) {
        zero_total += 2;
        if (ordered_like_p(0, j)) ++zero_held;
        if (ordered_like_p(j, 0)) ++zero_held;
    }
    if (zero_total > 0 && zero_held < zero_total)
        rep.notes.push_back(pair_tag + ": claim (c) with index 0 included held for " +
                            std::to_string(zero_held) + "/" + std::to_string(zero_total) +
                            " ordered pairs (recorded, not asserted)");
    return rep;
}

Report check_lemma6(const OrbitCode& p, const OrbitCode& q) {
    const std::size_t m = q.period();
    if (m < 2) throw std::invalid_argument("lemma6 requires |Q| >= 2");

    Report rep;
    const std::string pair_tag = "P=" + p.word().str() + " Q=" + q.word().str();
    rep.name = "lemma6(" + pair_tag + ")";

    const OrbitCode pq = star(p, q);
    const auto q_shifts = shifts_of(q.sequence(), m);
    const auto product_shifts = shifts_of(pq.sequence(), m, p.period());

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (unimodal_cmp(q_shifts[i], q_shifts[j]) == Ordering::equal)
                rep.failures.push_back(pair_tag + ": unexpected tie between shifts " +
                                       std::to_string(i) + " and " + std::to_string(j) + " of Q");
            ++rep.checked;
            const bool lhs = unimodal_cmp(q_shifts[i], q_shifts[j]) == Ordering::greater;
            const bool rhs = unimodal_cmp(product_shifts[i], product_shifts[j]) == Ordering::greater;
            if (lhs != rhs)
                rep.failures.push_back(pair_tag + ": shift pair i=" + std::to_string(i) + " j=" +
                                       std::to_string(j) +
                                       " of the product is not ordered like Q");
        }
    }
    return rep;
}

}  // namespace hforce
