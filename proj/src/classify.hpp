#pragma once

#include <string>
#include <vector>

#include "wlp.hpp"

namespace wlp {

// One-parameter graph families the sweeps range over. The tadpole variants
// fix one index of T_{m,n} and sweep the other.
enum class Family { Path, Cycle, Pan, TadpoleFixedM, TadpoleFixedN };

// Human-readable family tag with the fixed index substituted, e.g. "P_n",
// "C_n", "Pan_m", "T_{4,n}", "T_{m,2}".
std::string family_label(Family f, int fixed);

// The family member for one parameter value (the swept index).
Graph family_member(Family f, int fixed, int param);

// Smallest parameter value for which the family member exists.
int family_min_param(Family f);

struct SweepEntry {
    int param = 0;
    bool indeterminate = false;
    std::string message;  // set when indeterminate
    WlpReport report;     // meaningful when not indeterminate
};

struct SweepTable {
    Family family = Family::Path;
    int fixed = 0;
    int lo = 0, hi = 0;
    std::vector<SweepEntry> entries;

    // Parameters whose member has the property (indeterminate excluded).
    std::vector<int> wlp_params() const;
    bool any_indeterminate() const;
};

// Runs wlp_check across param = lo..hi. A per-parameter indeterminate rank
// is recorded in the entry instead of aborting the sweep. Verdicts do not
// depend on the seed; certificates may.
SweepTable classify_family(Family f, int fixed, int lo, int hi,
                           const WlpOptions& opts = {});

} // namespace wlp
