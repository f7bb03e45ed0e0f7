#include "advlab/harness/report.hpp"

#include <ostream>

namespace advlab::harness {

nlohmann::json to_json(const RunReport& report) {
    using nlohmann::json;
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json out = {{"schema", report_schema},
                {"label", report.label},
                {"problem", report.problem},
                {"epsilon", report.epsilon},
                {"model", report.model},
                {"n", report.n},
                {"digest", report.digest},
                {"status", to_string(report.status)},
                {"oracle_value", report.oracle_value},
                {"online_value", report.online_value},
                {"ratio", report.ratio},
                {"bits_per_request", report.bits_per_request},
                {"total_bits", report.total_bits},
                {"checks", checks},
                {"wall_ms", report.wall_ms}};
    if (report.problem != "bin") out["machines"] = report.machines;
    if (report.width_bound) out["width_bound"] = *report.width_bound;
    if (!report.message.empty()) out["message"] = report.message;
    return out;
}

std::map<std::string, GroupSummary> summarize(const std::vector<RunReport>& reports) {
    std::map<std::string, GroupSummary> groups;
    std::map<std::string, Rational> worst;
    for (const auto& r : reports) {
        const std::string key = r.problem + " " + r.epsilon + " " + r.model;
        auto& g = groups[key];
        ++g.runs;
        switch (r.status) {
        case RunStatus::pass: ++g.passed; break;
        case RunStatus::fail: ++g.failed; break;
        case RunStatus::skipped: ++g.skipped; break;
        case RunStatus::error: ++g.errors; break;
        }
        if (r.status == RunStatus::skipped || r.status == RunStatus::error || r.ratio.empty() || r.ratio == "-") continue;
        const Rational ratio = parse_rational(r.ratio);
        const bool cover = r.problem == "cover";
        auto it = worst.find(key);
        if (it == worst.end())
            worst.emplace(key, ratio);
        else if (cover ? ratio < it->second : ratio > it->second)
            it->second = ratio;
    }
    for (auto& [key, value] : worst) groups[key].worst_ratio = format_rational(value);
    return groups;
}

nlohmann::json suite_to_json(const std::vector<RunReport>& reports) {
    using nlohmann::json;
    json runs = json::array();
    for (const auto& r : reports) runs.push_back(to_json(r));
    json groups = json::object();
    for (const auto& [key, g] : summarize(reports))
        groups[key] = json{{"runs", g.runs},       {"passed", g.passed}, {"failed", g.failed},
                           {"skipped", g.skipped}, {"errors", g.errors}, {"worst_ratio", g.worst_ratio}};
    return json{{"schema", report_schema}, {"runs", runs}, {"groups", groups}, {"all_passed", suite_passed(reports)}};
}

void write_csv(std::ostream& out, const std::vector<RunReport>& reports) {
    out << "instance,problem,epsilon,model,status,oracle,online,ratio,bits_per_request\n";
    for (const auto& r : reports)
        out << (r.label.empty() ? r.digest : r.label) << ',' << r.problem << ',' << r.epsilon << ',' << r.model << ','
            << to_string(r.status) << ',' << r.oracle_value << ',' << r.online_value << ',' << r.ratio << ','
            << r.bits_per_request << '\n';
}

bool suite_passed(const std::vector<RunReport>& reports) {
    for (const auto& r : reports)
        if (r.status == RunStatus::fail || r.status == RunStatus::error) return false;
    return true;
}

}  // namespace advlab::harness
