#include "hforce/forcing.hpp"

#include "hforce/decompose.hpp"
#include "hforce/star.hpp"
#include "hforce/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hforce;

namespace {

OrbitCode code(const char* w) { return OrbitCode::checked(Word::parse(w)); }

std::vector<std::string> words(const std::vector<OrbitCode>& codes) {
    std::vector<std::string> out;
    for (const auto& c : codes) out.push_back(c.word().str());
    return out;
}

}  // namespace

TEST_CASE("forcing decisions") {
    CHECK(forces(code("10011"), code("10010")));
    CHECK_FALSE(forces(code("1"), code("10")));
    CHECK(forces(code("10"), code("1")));
    for (const auto& p : enumerate_codes(10)) CHECK(forces(p, p));
}

TEST_CASE("direct forced sets") {
    CHECK(words(forced_set_direct(code("10"), 2)) == std::vector<std::string>{"0", "1", "10"});
    CHECK(words(forced_set_direct(code("1"), 2)) == std::vector<std::string>{"0", "1"});
    CHECK_THROWS_AS(forced_set_direct(code("10"), 30), EnumerationCapError);

    // Every code starting with 1 forces both fixed points.
    for (const auto& p : enumerate_codes(6)) {
        if (p.word()[0] != '1') continue;
        const auto set = words(forced_set_direct(p, 2));
        CHECK(std::find(set.begin(), set.end(), "0") != set.end());
        CHECK(std::find(set.begin(), set.end(), "1") != set.end());
    }
}

TEST_CASE("structured enumeration agrees with direct enumeration") {
    const auto s = star(code("10010"), code("10010"));
    CHECK(forced_set_structured(s, 12) == forced_set_direct(s, 12));

    // Single NBT factor: both paths are the same enumeration by construction.
    CHECK(forced_set_structured(code("10010"), 10) == forced_set_direct(code("10010"), 10));

    CHECK_THROWS_WITH_AS(static_cast<void>(forced_set_structured(code("10"), 10)),
                         doctest::Contains("not in R"), std::invalid_argument);
}

TEST_CASE("structured branches carry the period budget") {
    // For S = P*P with |P| = 5 and budget 12, the second branch may only use
    // codes of period <= 2, so its contribution is {P*0, P*1, P*10}.
    const auto p = code("10010");
    const auto s = star(p, p);
    const auto result = forced_set_structured(s, 12);
    const std::set<std::string> as_set(words(result).begin(), words(result).end());
    CHECK(as_set.count(star(p, code("0")).word().str()) == 1);
    CHECK(as_set.count(star(p, code("1")).word().str()) == 1);
    CHECK(as_set.count(star(p, code("10")).word().str()) == 1);
    CHECK(as_set.count(s.word().str()) == 0);  // period 25 exceeds the budget
}

TEST_CASE("poset construction") {
    const auto poset = forcing_poset({code("0"), code("1"), code("10")});
    CHECK(words(poset.nodes) == std::vector<std::string>{"0", "1", "10"});
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{1, 0}, {2, 1}};
    CHECK(poset.cover_edges == expected);

    CHECK(forcing_poset({code("10010")}).cover_edges.empty());

    // Transitive reduction: the 10 -> 0 edge is implied and must be absent.
    for (const auto& [from, to] : poset.cover_edges)
        CHECK_FALSE((from == 2 && to == 0));
}

TEST_CASE("forcing has no 2-cycles on distinct codes") {
    const auto codes = enumerate_codes(8);
    for (std::size_t i = 0; i < codes.size(); ++i)
        for (std::size_t j = i + 1; j < codes.size(); ++j)
            CHECK_FALSE((forces(codes[i], codes[j]) && forces(codes[j], codes[i])));
}

TEST_CASE("interior shift order transfers to the product") {
    CHECK(check_lemma5(code("10010"), code("10010")).passed());
    CHECK(check_lemma5(code("101"), code("1001")).passed());
    CHECK(check_lemma6(code("10010"), code("10010")).passed());
    CHECK(check_lemma6(code("101"), code("1001")).passed());
    CHECK_THROWS_AS(check_lemma5(code("1"), code("10")), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma6(code("10"), code("1")), std::invalid_argument);
}

TEST_CASE("every code forced by a product splits along the factors") {
    for (const auto& p : enumerate_codes(5)) {
        for (const auto& q : enumerate_codes(3)) {
            OrbitCode s = p;
            try {
                s = star(p, q);
            } catch (const ValidationError&) {
                continue;
            }
            const int budget = static_cast<int>(s.period());
            std::vector<OrbitCode> products;
            for (const auto& r : forced_set_direct(q, static_cast<int>(q.period()))) {
                try {
                    products.push_back(star(p, r));
                } catch (const ValidationError&) {
                }
            }
            for (const auto& t : forced_set_direct(s, budget)) {
                const bool by_left = forces(p, t);
                const bool as_product =
                    std::find(products.begin(), products.end(), t) != products.end();
                CHECK((by_left || as_product));
            }
        }
    }
}
