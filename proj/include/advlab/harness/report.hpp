#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "advlab/harness/experiment.hpp"

namespace advlab::harness {

inline constexpr int report_schema = 1;

nlohmann::json to_json(const RunReport& report);

struct GroupSummary {
    std::size_t runs = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::size_t errors = 0;
    std::string worst_ratio;  // largest for minimizing problems, smallest for cover
};

// Keyed by "problem eps model".
std::map<std::string, GroupSummary> summarize(const std::vector<RunReport>& reports);

// {"schema": 1, "runs": [...], "groups": {...}, "all_passed": bool}
nlohmann::json suite_to_json(const std::vector<RunReport>& reports);

// instance,problem,epsilon,model,status,oracle,online,ratio,bits_per_request
void write_csv(std::ostream& out, const std::vector<RunReport>& reports);

// True iff no executed run failed or errored.
bool suite_passed(const std::vector<RunReport>& reports);

}  // namespace advlab::harness
