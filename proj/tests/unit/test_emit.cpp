#include "hforce/emit.hpp"

#include <doctest.h>

using namespace hforce;

namespace {

OrbitCode code(const char* w) { return OrbitCode::checked(Word::parse(w)); }

}  // namespace

TEST_CASE("json emission is stable and round-trips byte for byte") {
    CliResult result;
    result.query = Json{{"command", "forced"}, {"code", "10"}, {"max_period", 2}};
    result.orbits = std::vector<OrbitCode>{code("0"), code("1"), code("10")};

    const std::string once = emit_json(result);
    CHECK(once == emit_json(result));
    CHECK(Json::parse(once).dump(2) + "\n" == once);

    const Json parsed = Json::parse(once);
    CHECK(parsed["query"]["code"] == "10");
    REQUIRE(parsed["orbits"].size() == 3);
    CHECK(parsed["orbits"][2]["code"] == "10");
    CHECK(parsed["orbits"][2]["period"] == 2);
    CHECK_FALSE(parsed.contains("edges"));
    CHECK_FALSE(parsed.contains("report"));
}

TEST_CASE("report emission") {
    CliResult result;
    result.query = Json{{"command", "verify"}, {"check", "lemma6"}};
    Report rep;
    rep.name = "lemma6";
    rep.checked = 10;
    result.report = rep;

    const Json parsed = Json::parse(emit_json(result));
    CHECK(parsed["report"]["checked"] == 10);
    CHECK(parsed["report"]["failures"].empty());
    CHECK(parsed["report"]["passed"] == true);
    CHECK_FALSE(parsed.contains("orbits"));
}

TEST_CASE("dot emission") {
    const auto poset = forcing_poset({code("0"), code("1"), code("10")});
    const std::string expected =
        "digraph forcing {\n"
        "  n0 [label=\"0 (1)\"];\n"
        "  n1 [label=\"1 (1)\"];\n"
        "  n2 [label=\"10 (2)\"];\n"
        "  n1 -> n0;\n"
        "  n2 -> n1;\n"
        "}\n";
    CHECK(emit_dot(poset) == expected);
    CHECK(emit_dot(poset) == emit_dot(poset));

    CHECK(emit_dot(ForcingPoset{}) == "digraph forcing {\n}\n");
}

TEST_CASE("report text") {
    Report rep;
    rep.name = "demo";
    rep.checked = 3;
    CHECK(format_report(rep) == "demo: checked=3 failures=0 PASS\n");
    rep.failures.push_back("bad thing");
    rep.skipped = 1;
    const std::string text = format_report(rep);
    CHECK(text.find("skipped=1") != std::string::npos);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("bad thing") != std::string::npos);
}
