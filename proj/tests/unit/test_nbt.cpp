#include "hforce/nbt.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hforce;

namespace {

// Structural check of the core-word shape: 1 0^{u1} 11 0^{u2} 11 ... 11 0^{um} 1
// with every zero-run nonempty.
bool matches_shape(const std::string& w, long long m) {
    if (w.size() < 2 || w.front() != '1' || w.back() != '1') return false;
    std::vector<std::pair<char, std::size_t>> runs;
    for (const char c : w) {
        if (!runs.empty() && runs.back().first == c)
            ++runs.back().second;
        else
            runs.emplace_back(c, 1);
    }
    if (runs.size() != 2 * static_cast<std::size_t>(m) + 1) return false;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const bool one_run = i % 2 == 0;
        if (one_run && runs[i].first != '1') return false;
        if (!one_run && runs[i].first != '0') return false;
        if (one_run) {
            const bool edge = i == 0 || i + 1 == runs.size();
            if (edge && runs[i].second != 1) return false;
            if (!edge && runs[i].second != 2) return false;
        } else if (runs[i].second < 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("rational validation") {
    CHECK(NbtRational::create(1, 3, 0).str() == "1/3");
    CHECK_THROWS_AS(NbtRational::create(2, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(NbtRational::create(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(NbtRational::create(3, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(NbtRational::create(0, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(NbtRational::create(1, 3, 2), std::invalid_argument);
    CHECK(NbtRational::parse("2/5", 1).tail() == 1);
    CHECK_THROWS_AS(NbtRational::parse("25", 0), ParseError);
    CHECK_THROWS_AS(NbtRational::parse("a/3", 0), ParseError);
    CHECK_THROWS_AS(NbtRational::parse("1/", 0), ParseError);
}

TEST_CASE("core words from lattice crossings") {
    CHECK(nbt_code(NbtRational::create(1, 3, 0)).str() == "1001");
    CHECK(nbt_code(NbtRational::create(2, 5, 0)).str() == "101101");
    CHECK(nbt_code(NbtRational::create(1, 4, 0)).str() == "10001");
    CHECK(nbt_code(NbtRational::create(2, 7, 0)).str() == "10011001");
}

TEST_CASE("core word shape for every denominator up to 50") {
    for (const auto& q : nbt_rationals_upto(50)) {
        const std::string w = nbt_code(q).str();
        CHECK(w.size() == static_cast<std::size_t>(q.denominator()) + 1);
        std::string reversed(w.rbegin(), w.rend());
        CHECK(w == reversed);
        CHECK(std::count(w.begin(), w.end(), '1') == 2 * q.numerator());
        CHECK(matches_shape(w, q.numerator()));
    }
}

TEST_CASE("orbit codes from rationals") {
    CHECK(nbt_orbit(NbtRational::create(1, 3, 0)).word().str() == "10010");
    CHECK(nbt_orbit(NbtRational::create(1, 3, 1)).word().str() == "10011");
    CHECK(nbt_orbit(NbtRational::create(2, 5, 0)).period() == 7);

    // Both tail choices produce valid codes for every denominator up to 50.
    for (const auto& q : nbt_rationals_upto(50)) {
        for (int tail = 0; tail <= 1; ++tail) {
            const auto orbit =
                nbt_orbit(NbtRational::create(q.numerator(), q.denominator(), tail));
            CHECK(orbit.period() == static_cast<std::size_t>(q.denominator()) + 2);
        }
    }
}

TEST_CASE("recognition") {
    const auto r0 = recognize_nbt(OrbitCode::checked(Word::parse("10010")));
    REQUIRE(r0.has_value());
    CHECK(r0->str() == "1/3");
    CHECK(r0->tail() == 0);

    const auto r1 = recognize_nbt(OrbitCode::checked(Word::parse("10011")));
    REQUIRE(r1.has_value());
    CHECK(r1->tail() == 1);

    CHECK_FALSE(recognize_nbt(OrbitCode::checked(Word::parse("10"))).has_value());
    // Right 1-count, wrong geometry: 100100 is not c_{1/5} = 100001.
    CHECK_FALSE(recognize_nbt(OrbitCode::checked(Word::parse("1001000"))).has_value());

    for (const auto& q : nbt_rationals_upto(50)) {
        for (int tail = 0; tail <= 1; ++tail) {
            const auto with_tail = NbtRational::create(q.numerator(), q.denominator(), tail);
            const auto back = recognize_nbt(nbt_orbit(with_tail));
            REQUIRE(back.has_value());
            CHECK(*back == with_tail);
        }
    }
}

TEST_CASE("order correspondence with the rationals") {
    // 1/3 <= 2/5 must pair with the reversed order of the code streams.
    for (int tail = 0; tail <= 1; ++tail) {
        const auto small = nbt_orbit(NbtRational::create(1, 3, tail)).sequence();
        const auto large = nbt_orbit(NbtRational::create(2, 5, tail)).sequence();
        CHECK(unimodal_cmp(small, large) == Ordering::greater);
    }

    const auto report = hall_order_check(12);
    CHECK(report.any_passed());
    for (const auto& conv : report.conventions) {
        CHECK(conv.passed());
        CHECK(conv.checked > 0);
    }
    CHECK_THROWS_AS(hall_order_check(2), std::invalid_argument);
}
