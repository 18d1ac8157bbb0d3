#include "classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"

namespace wlp {

std::string family_label(Family f, int fixed) {
    switch (f) {
        case Family::Path: return "P_n";
        case Family::Cycle: return "C_n";
        case Family::Pan: return "Pan_m";
        case Family::TadpoleFixedM:
            return "T_{" + std::to_string(fixed) + ",n}";
        case Family::TadpoleFixedN:
            return "T_{m," + std::to_string(fixed) + "}";
    }
    throw std::logic_error("unknown family");
}

Graph family_member(Family f, int fixed, int param) {
    switch (f) {
        case Family::Path: return path(param);
        case Family::Cycle: return cycle(param);
        case Family::Pan: return pan(param);
        case Family::TadpoleFixedM: return tadpole(fixed, param);
        case Family::TadpoleFixedN: return tadpole(param, fixed);
    }
    throw std::logic_error("unknown family");
}

int family_min_param(Family f) {
    switch (f) {
        case Family::Path: return 1;
        case Family::Cycle: return 3;
        case Family::Pan: return 3;
        case Family::TadpoleFixedM: return 0;  // T_{m,0} = C_m
        case Family::TadpoleFixedN: return 3;
    }
    throw std::logic_error("unknown family");
}

std::vector<int> SweepTable::wlp_params() const {
    std::vector<int> out;
    for (const SweepEntry& e : entries)
        if (!e.indeterminate && e.report.has_wlp) out.push_back(e.param);
    return out;
}

bool SweepTable::any_indeterminate() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const SweepEntry& e) { return e.indeterminate; });
}

SweepTable classify_family(Family f, int fixed, int lo, int hi,
                           const WlpOptions& opts) {
    if (lo < family_min_param(f))
        throw std::invalid_argument("sweep range starts below the family's "
                                    "smallest member");
    if (hi < lo) throw std::invalid_argument("empty sweep range");
    SweepTable table;
    table.family = f;
    table.fixed = fixed;
    table.lo = lo;
    table.hi = hi;
    // Parallelism is spent across parameters; each check runs single-threaded.
    WlpOptions member_opts = opts;
    member_opts.parallelism = 1;
    table.entries.resize(hi - lo + 1);
    parallel_for(hi - lo + 1, opts.parallelism, [&](int i) {
        SweepEntry& entry = table.entries[i];
        entry.param = lo + i;
        try {
            entry.report =
                wlp_check(family_member(f, fixed, entry.param), member_opts);
        } catch (const IndeterminateRank& e) {
            entry.indeterminate = true;
            entry.message = e.what();
        }
    });
    return table;
}

} // namespace wlp
