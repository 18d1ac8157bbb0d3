#pragma once

#include <string>
#include <vector>

#include "classify.hpp"

namespace wlp {

// A classification table embedded as data: the claim it encodes, the sweep
// that checks it, and the exact parameter set expected to have the property.
struct ExpectedTable {
    std::string id;     // reproduce target name, e.g. "thm-tm2"
    std::string claim;  // the statement being reproduced, in words
    Family family = Family::Path;
    int fixed = 0;
    int lo = 0, hi = 0;
    std::vector<int> wlp_params;
};

const std::vector<ExpectedTable>& expected_tables();

struct ReproduceLine {
    std::string text;
    bool ok = false;
};

struct ReproduceReport {
    std::string target;
    std::string claim;
    bool ok = false;  // conjunction of the lines
    std::vector<ReproduceLine> lines;
    double seconds = 0;
};

// Known reproduce targets, in the order "all" runs them.
const std::vector<std::string>& reproduce_targets();

// Runs one target ("all" expands to every other target) and diffs the
// computed results against the embedded expectations. Line granularity is
// one line per swept parameter for the classification targets and one line
// per statement for the mode and identity targets. Unknown target ->
// std::invalid_argument.
std::vector<ReproduceReport> reproduce(const std::string& target,
                                       const WlpOptions& opts = {});

} // namespace wlp
