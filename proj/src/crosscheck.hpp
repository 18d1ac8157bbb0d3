#pragma once

#include <string>
#include <vector>

#include "graph.hpp"
#include "rank.hpp"

namespace wlp {

struct CrosscheckOptions {
    int max_brute_force_vertices = 18;  // polynomial oracle cutoff
    int max_exact_rank_columns = 500;   // rank oracle cutoff
    RankPolicy policy;
};

struct CrosscheckLine {
    std::string text;
    bool ok = false;
};

struct CrosscheckReport {
    bool ok = false;
    int polynomial_checks = 0;
    int rank_checks = 0;
    std::vector<CrosscheckLine> lines;  // one line per corpus graph
    double seconds = 0;
};

// The fixed corpus the oracle run covers: every path with up to 18
// vertices, cycles up to C_18, pans up to Pan_12, tadpoles with m = 3..8
// and n = 0..8, the edgeless 10-vertex graph, seed-fixed Erdos-Renyi
// graphs on 12 vertices, and small disjoint unions.
std::vector<Graph> crosscheck_corpus();

// For every corpus graph within the brute-force cutoff: the recurrence
// polynomial must equal the subset-enumeration oracle. For every level map
// with at most max_exact_rank_columns columns: certified_rank must equal
// the fraction-free exact rank, and its certificate must re-verify.
CrosscheckReport oracle_crosscheck(const CrosscheckOptions& opts = {});

} // namespace wlp
