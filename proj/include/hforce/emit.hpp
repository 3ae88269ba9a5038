#pragma once

#include "hforce/forcing.hpp"
#include "hforce/report.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hforce {

// Key order is preserved, so repeated emission is byte-identical.
using Json = nlohmann::ordered_json;

struct CliResult {
    Json query;
    std::optional<std::vector<OrbitCode>> orbits;
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> edges;
    std::optional<Report> report;
};

// Stable schema {"query", "orbits", "edges", "report"}; top-level fields
// absent when inapplicable. Orbits are emitted in the order given, which is
// canonical wherever the library produced them.
std::string emit_json(const CliResult& result);

// One node per code labeled "word (period)", one edge per cover pair, in
// deterministic order.
std::string emit_dot(const ForcingPoset& poset);

// Human-readable report: a summary line plus notes and the first failures.
std::string format_report(const Report& report);

}  // namespace hforce
