#include "hforce/orbit_code.hpp"

#include <algorithm>
#include <string>

namespace hforce {

namespace {

// Ordering of (rot_a)^inf vs (rot_b)^inf for two rotations of one word.
// Both streams are n-periodic, so a disagreement, if any, occurs within the
// first n symbols.
Ordering cmp_rotations(const std::string& bits, std::size_t a, std::size_t b) {
    const std::size_t n = bits.size();
    bool odd = false;
    for (std::size_t d = 0; d < n; ++d) {
        const char ca = bits[(a + d) % n];
        const char cb = bits[(b + d) % n];
        if (ca != cb) return ((ca < cb) != odd) ? Ordering::less : Ordering::greater;
        odd = odd != (ca == '1');
    }
    return Ordering::equal;
}

std::size_t maximal_rotation_index(const std::string& bits) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < bits.size(); ++k)
        if (cmp_rotations(bits, k, best) == Ordering::greater) best = k;
    return best;
}

}  // namespace

bool is_primitive(const Word& w) {
    return !w.empty() && w.primitive_root().size() == w.size();
}

bool is_maximal(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_maximal: empty word");
    for (std::size_t k = 1; k < w.size(); ++k)
        if (cmp_rotations(w.str(), k, 0) == Ordering::greater) return false;
    return true;
}

OrbitCode OrbitCode::canonical(const Word& w) {
    if (w.empty()) throw std::invalid_argument("orbit code: empty word");
    const Word root = w.primitive_root();
    return OrbitCode(root.rotated(maximal_rotation_index(root.str())));
}

OrbitCode OrbitCode::checked(Word w) {
    if (w.empty()) throw std::invalid_argument("orbit code: empty word");
    if (!is_primitive(w)) {
        Word root = w.primitive_root();
        throw ValidationError("word " + w.str() + " is not primitive (root " + root.str() + ")",
                              std::move(root));
    }
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (cmp_rotations(w.str(), k, 0) == Ordering::greater) {
            Word rotation = w.rotated(k);
            throw ValidationError(
                "word " + w.str() + " is not maximal: rotation " + rotation.str() + " exceeds it",
                std::move(rotation));
        }
    }
    return OrbitCode(std::move(w));
}

EventuallyPeriodicSequence OrbitCode::sequence() const {
    return EventuallyPeriodicSequence::periodic(word_);
}

bool canonical_less(const OrbitCode& a, const OrbitCode& b) {
    if (a.period() != b.period()) return a.period() < b.period();
    // Equal periods: distinct words disagree within one period of symbols.
    const std::string& wa = a.word().str();
    const std::string& wb = b.word().str();
    bool odd = false;
    for (std::size_t i = 0; i < wa.size(); ++i) {
        if (wa[i] != wb[i]) return (wa[i] < wb[i]) != odd;
        odd = odd != (wa[i] == '1');
    }
    return false;
}

void canonical_sort_unique(std::vector<OrbitCode>& codes) {
    std::sort(codes.begin(), codes.end(), canonical_less);
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
}

std::vector<OrbitCode> enumerate_codes(int max_period, int cap) {
    if (max_period < 1) throw std::invalid_argument("max_period must be >= 1");
    if (cap < 1) throw std::invalid_argument("enumeration cap must be >= 1");
    if (max_period > cap)
        throw EnumerationCapError("max_period " + std::to_string(max_period) +
                                  " exceeds the enumeration cap " + std::to_string(cap));

    // Duval's algorithm: all Lyndon words of length <= max_period in lex
    // order. Each is a primitive necklace representative; rotating it to its
    // unimodal-maximal phase yields each code exactly once.
    const auto n = static_cast<std::size_t>(max_period);
    std::vector<std::vector<OrbitCode>> by_period(n + 1);
    std::string w = "0";
    while (true) {
        by_period[w.size()].push_back(OrbitCode::canonical(Word(w)));
        std::string t;
        t.reserve(n);
        for (std::size_t i = 0; i < n; ++i) t.push_back(w[i % w.size()]);
        while (!t.empty() && t.back() == '1') t.pop_back();
        if (t.empty()) break;
        t.back() = '1';
        w = std::move(t);
    }

    std::vector<OrbitCode> out;
    for (auto& bucket : by_period) {
        std::sort(bucket.begin(), bucket.end(), canonical_less);
        out.insert(out.end(), bucket.begin(), bucket.end());
    }
    return out;
}

}  // namespace hforce
