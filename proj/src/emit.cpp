#include "hforce/emit.hpp"

namespace hforce {

std::string emit_json(const CliResult& result) {
    Json j;
    j["query"] = result.query;
    if (result.orbits) {
        Json orbits = Json::array();
        for (const auto& code : *result.orbits) {
            Json entry;
            entry["code"] = code.word().str();
            entry["period"] = code.period();
            orbits.push_back(std::move(entry));
        }
        j["orbits"] = std::move(orbits);
    }
    if (result.edges) {
        Json edges = Json::array();
        for (const auto& [from, to] : *result.edges) edges.push_back(Json::array({from, to}));
        j["edges"] = std::move(edges);
    }
    if (result.report) {
        const Report& r = *result.report;
        Json report;
        report["name"] = r.name;
        report["checked"] = r.checked;
        report["skipped"] = r.skipped;
        report["failures"] = r.failures;
        report["notes"] = r.notes;
        report["passed"] = r.passed();
        j["report"] = std::move(report);
    }
    return j.dump(2) + "\n";
}

std::string emit_dot(const ForcingPoset& poset) {
    std::string out = "digraph forcing {\n";
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" + poset.nodes[i].word().str() + " (" +
               std::to_string(poset.nodes[i].period()) + ")\"];\n";
    }
    for (const auto& [from, to] : poset.cover_edges)
        out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
    out += "}\n";
    return out;
}

std::string format_report(const Report& report) {
    std::string out = report.name + ": checked=" + std::to_string(report.checked);
    if (report.skipped > 0) out += " skipped=" + std::to_string(report.skipped);
    out += " failures=" + std::to_string(report.failures.size());
    out += report.passed() ? " PASS" : " FAIL";
    out += "\n";
    for (const auto& note : report.notes) out += "  note: " + note + "\n";
    const std::size_t shown = std::min<std::size_t>(report.failures.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) out += "  fail: " + report.failures[i] + "\n";
    if (report.failures.size() > shown)
        out += "  ... " + std::to_string(report.failures.size() - shown) + " more failures\n";
    return out;
}

}  // namespace hforce
