#include "crosscheck.hpp"

#include <chrono>
#include <sstream>

#include "indpoly.hpp"
#include "levels.hpp"

namespace wlp {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_graph(int n, int percent, std::uint64_t seed,
                   const std::string& name) {
    std::uint64_t state = seed;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (splitmix64(state) % 100 <
                static_cast<std::uint64_t>(percent))
                edges.push_back({i, j});
    return from_edge_list(n, edges, name);
}

} // namespace

std::vector<Graph> crosscheck_corpus() {
    std::vector<Graph> corpus;
    for (int n = 1; n <= 18; ++n) corpus.push_back(path(n));
    for (int n = 3; n <= 18; ++n) corpus.push_back(cycle(n));
    for (int m = 3; m <= 12; ++m) corpus.push_back(pan(m));
    for (int m = 3; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) corpus.push_back(tadpole(m, n));
    corpus.push_back(from_edge_list(10, {}));
    for (std::uint64_t seed : {1ull, 2ull, 3ull})
        corpus.push_back(random_graph(12, 25, seed,
                                      "ER_12_" + std::to_string(seed)));
    corpus.push_back(disjoint_union(path(2), path(3)));
    corpus.push_back(disjoint_union(path(5), cycle(6)));
    corpus.push_back(disjoint_union(cycle(3), cycle(3)));
    corpus.push_back(disjoint_union(path(2), disjoint_union(path(1), cycle(4))));
    corpus.push_back(disjoint_union(tadpole(3, 2), tadpole(3, 2)));
    return corpus;
}

CrosscheckReport oracle_crosscheck(const CrosscheckOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    CrosscheckReport rep;
    rep.ok = true;
    std::uint64_t graph_index = 0;
    for (const Graph& g : crosscheck_corpus()) {
        ++graph_index;
        CrosscheckLine line;
        line.ok = true;
        std::ostringstream os;
        os << g.name() << ":";

        UPoly poly = independence_polynomial(g);
        if (g.vertex_count() <= opts.max_brute_force_vertices) {
            bool same = poly == brute_force_independence_polynomial(g);
            ++rep.polynomial_checks;
            line.ok = line.ok && same;
            os << " polynomial " << (same ? "ok" : "MISMATCH") << ";";
        } else {
            os << " polynomial oracle skipped (n=" << g.vertex_count()
               << ");";
        }

        int rank_checked = 0, rank_bad = 0;
        int socle = poly.degree();
        for (int j = 0; j < socle; ++j) {
            LevelMap lm = level_map(g, j);
            if (lm.matrix.cols() > opts.max_exact_rank_columns) continue;
            RankPolicy policy = opts.policy;
            policy.seed += 1000 * graph_index + static_cast<std::uint64_t>(j);
            RankCertificate cert = certified_rank(lm.matrix, policy);
            bool same = cert.rank == rank_exact(lm.matrix) &&
                        verify_certificate(lm.matrix, cert);
            ++rank_checked;
            if (!same) ++rank_bad;
            line.ok = line.ok && same;
        }
        rep.rank_checks += rank_checked;
        os << " certified vs exact rank ok at " << (rank_checked - rank_bad)
           << "/" << rank_checked << " maps";
        if (rank_bad > 0) os << " -> MISMATCH";

        line.text = os.str();
        rep.ok = rep.ok && line.ok;
        rep.lines.push_back(std::move(line));
    }
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

} // namespace wlp
