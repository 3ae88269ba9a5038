#include "hforce/star.hpp"

#include <string>

namespace hforce {

OrbitCode star(const OrbitCode& p, const OrbitCode& q) {
    const std::string& cp = p.word().str();
    const std::string a = cp.substr(0, cp.size() - 1);
    const bool flip = epsilon(Word(a)) == Parity::odd;
    std::string bits;
    bits.reserve(p.period() * q.period());
    for (const char b : q.word().str()) {
        bits += a;
        bits.push_back(flip ? (b == '0' ? '1' : '0') : b);
    }
    return OrbitCode::checked(Word(std::move(bits)));
}

OrbitCode star_chain(std::span<const OrbitCode> codes) {
    if (codes.empty()) throw std::invalid_argument("star_chain: empty factor list");
    OrbitCode acc = codes.front();
    for (std::size_t i = 1; i < codes.size(); ++i) acc = star(acc, codes[i]);
    return acc;
}

std::vector<StarFactorization> factorizations(const OrbitCode& s) {
    const std::string& w = s.word().str();
    const std::size_t total = w.size();
    std::vector<StarFactorization> out;
    for (std::size_t n = 2; n * 2 <= total; ++n) {
        if (total % n != 0) continue;
        const std::size_t m = total / n;
        const std::string a = w.substr(0, n - 1);
        bool consistent = true;
        for (std::size_t k = 1; k < m && consistent; ++k)
            consistent = w.compare(k * n, n - 1, a) == 0;
        if (!consistent) continue;

        const bool flip = epsilon(Word(a)) == Parity::odd;
        std::string inner;
        inner.reserve(m);
        for (std::size_t k = 0; k < m; ++k) {
            const char t = w[k * n + n - 1];
            inner.push_back(flip ? (t == '0' ? '1' : '0') : t);
        }
        const Word inner_word(inner);
        if (!is_primitive(inner_word) || !is_maximal(inner_word)) continue;

        std::vector<int> tails;
        for (const char t : {'0', '1'}) {
            const Word candidate = Word(a).appended(t);
            if (is_primitive(candidate) && is_maximal(candidate)) tails.push_back(t - '0');
        }
        if (tails.empty()) continue;

        out.push_back(StarFactorization{Word(a), std::move(tails),
                                        OrbitCode::checked(inner_word), n, m});
    }
    return out;
}

}  // namespace hforce
