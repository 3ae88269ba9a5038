#include "hforce/nbt.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hforce {

NbtRational NbtRational::create(long long numerator, long long denominator, int tail) {
    if (tail != 0 && tail != 1) throw std::invalid_argument("tail must be 0 or 1");
    if (numerator < 1 || denominator < 1)
        throw std::invalid_argument("rational must have positive numerator and denominator");
    if (std::gcd(numerator, denominator) != 1)
        throw std::invalid_argument("rational " + std::to_string(numerator) + "/" +
                                    std::to_string(denominator) + " is not reduced");
    if (2 * numerator >= denominator)
        throw std::invalid_argument("rational " + std::to_string(numerator) + "/" +
                                    std::to_string(denominator) +
                                    " is outside the open interval (0, 1/2)");
    return NbtRational(numerator, denominator, tail);
}

NbtRational NbtRational::parse(std::string_view fraction, int tail) {
    const std::size_t slash = fraction.find('/');
    if (slash == std::string_view::npos)
        throw ParseError("expected fraction of the form m/n", fraction.size());
    long long num = 0;
    long long den = 0;
    const char* num_begin = fraction.data();
    const char* num_end = fraction.data() + slash;
    auto rn = std::from_chars(num_begin, num_end, num);
    if (rn.ec != std::errc() || rn.ptr != num_end)
        throw ParseError("invalid numerator in fraction", 0);
    const char* den_begin = fraction.data() + slash + 1;
    const char* den_end = fraction.data() + fraction.size();
    auto rd = std::from_chars(den_begin, den_end, den);
    if (rd.ec != std::errc() || rd.ptr != den_end || den_begin == den_end)
        throw ParseError("invalid denominator in fraction", slash + 1);
    return create(num, den, tail);
}

std::string NbtRational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Word nbt_code(const NbtRational& q) {
    const long long m = q.numerator();
    const long long n = q.denominator();
    std::string bits(static_cast<std::size_t>(n) + 1, '0');
    // The segment crosses y = k at x = k*n/m; window membership
    // i-1 < kn/m < i+1 is decided as m(i-1) < kn < m(i+1).
    for (long long k = 0; k <= m; ++k) {
        for (long long i = 0; i <= n; ++i) {
            if (m * (i - 1) < k * n && k * n < m * (i + 1))
                bits[static_cast<std::size_t>(i)] = '1';
        }
    }
    return Word(std::move(bits));
}

OrbitCode nbt_orbit(const NbtRational& q) {
    return OrbitCode::checked(nbt_code(q).appended(static_cast<char>('0' + q.tail())));
}

std::optional<NbtRational> recognize_nbt(const OrbitCode& c) {
    const std::string& w = c.word().str();
    if (w.size() < 5) return std::nullopt;
    const int tail = w.back() - '0';
    const std::string core = w.substr(0, w.size() - 1);
    const long long ones = std::count(core.begin(), core.end(), '1');
    if (ones < 2 || ones % 2 != 0) return std::nullopt;
    const long long m = ones / 2;
    const long long n = static_cast<long long>(w.size()) - 2;
    if (std::gcd(m, n) != 1 || 2 * m >= n) return std::nullopt;
    const NbtRational q = NbtRational::create(m, n, tail);
    if (nbt_code(q).str() != core) return std::nullopt;
    return q;
}

std::vector<NbtRational> nbt_rationals_upto(int max_denominator, int tail) {
    std::vector<NbtRational> out;
    for (long long n = 3; n <= max_denominator; ++n)
        for (long long m = 1; 2 * m < n; ++m)
            if (std::gcd(m, n) == 1) out.push_back(NbtRational::create(m, n, tail));
    return out;
}

HallOrderReport hall_order_check(int max_denominator) {
    if (max_denominator < 3)
        throw std::invalid_argument("max_denominator must be >= 3");
    HallOrderReport report;
    report.max_denominator = max_denominator;
    for (int tail = 0; tail <= 1; ++tail) {
        auto& conv = report.conventions[static_cast<std::size_t>(tail)];
        conv.tail = tail;
        const auto rationals = nbt_rationals_upto(max_denominator, tail);
        std::vector<EventuallyPeriodicSequence> streams;
        streams.reserve(rationals.size());
        for (const auto& q : rationals) streams.push_back(nbt_orbit(q).sequence());
        for (std::size_t a = 0; a < rationals.size(); ++a) {
            for (std::size_t b = 0; b < rationals.size(); ++b) {
                ++conv.checked;
                const auto& qa = rationals[a];
                const auto& qb = rationals[b];
                const bool le = qa.numerator() * qb.denominator() <=
                                qb.numerator() * qa.denominator();
                const bool ge = unimodal_cmp(streams[a], streams[b]) != Ordering::less;
                if (le != ge && !conv.counterexample) {
                    conv.counterexample = "tail=" + std::to_string(tail) + " q=" + qa.str() +
                                          " q'=" + qb.str() + ": q<=q' is " +
                                          (le ? "true" : "false") +
                                          " but (c_q t)^inf >=1 (c_q' t)^inf is " +
                                          (ge ? "true" : "false");
                }
            }
        }
    }
    return report;
}

}  // namespace hforce
