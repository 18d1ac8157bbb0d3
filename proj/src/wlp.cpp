#include "wlp.hpp"

#include <chrono>
#include <stdexcept>

#include "indpoly.hpp"
#include "parallel.hpp"

namespace wlp {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + (salt + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::optional<FailureKind> classify_failure(int h_j, int h_j1, int rank) {
    if (rank == std::min(h_j, h_j1)) return std::nullopt;
    if (h_j < h_j1) return FailureKind::Injectivity;
    if (h_j > h_j1) return FailureKind::Surjectivity;
    return FailureKind::Both;
}

} // namespace

std::string to_string(FailureKind k) {
    switch (k) {
        case FailureKind::Injectivity: return "INJECTIVITY";
        case FailureKind::Surjectivity: return "SURJECTIVITY";
        case FailureKind::Both: return "BOTH";
    }
    return "?";
}

std::optional<int> WlpReport::fail_degree() const {
    for (const DegreeVerdict& v : degrees)
        if (!v.maximal) return v.j;
    return std::nullopt;
}

std::optional<FailureKind> WlpReport::fail_kind() const {
    for (const DegreeVerdict& v : degrees)
        if (!v.maximal) return v.failure_kind;
    return std::nullopt;
}

WlpReport wlp_check(const Graph& g, const WlpOptions& opts) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("graph must have at least one vertex");
    auto t0 = std::chrono::steady_clock::now();

    WlpReport report;
    report.graph_name = g.name();
    report.n = g.vertex_count();
    report.seed = opts.policy.seed;

    UPoly series = independence_polynomial(g);
    report.hilbert.h = series.coeffs();
    report.hilbert.socle_degree = series.degree();
    report.mode = mode_analysis(series);

    int D = report.hilbert.socle_degree;
    std::vector<LevelBasis> bases(D + 1);
    for (int k = 0; k <= D; ++k) {
        bases[k] = level_basis(g, k);
        if (BigInt(bases[k].size()) != report.hilbert.h[k])
            throw std::logic_error("basis size disagrees with Hilbert series");
    }

    report.has_wlp = true;
    auto check_degree = [&](int j) {
        auto tj = std::chrono::steady_clock::now();
        LevelMap map = level_map_from_bases(g, bases[j], bases[j + 1]);
        RankPolicy policy = opts.policy;
        policy.seed = derive_seed(opts.policy.seed, static_cast<std::uint64_t>(j));

        DegreeVerdict v;
        v.j = j;
        v.h_j = bases[j].size();
        v.h_j1 = bases[j + 1].size();
        try {
            v.certificate = certified_rank(map.matrix, policy);
        } catch (const IndeterminateRank& e) {
            throw IndeterminateRank(std::string(e.what()) + " (degree " +
                                    std::to_string(j) + " of " + g.name() + ")");
        }
        v.rank = v.certificate.rank;
        v.maximal = v.rank == std::min(v.h_j, v.h_j1);
        v.failure_kind = classify_failure(v.h_j, v.h_j1, v.rank);
        v.seconds = seconds_since(tj);
        return v;
    };

    if (opts.parallelism > 1 && !opts.fail_fast && D > 1) {
        // Degrees are independent: each gets its own seed and level map.
        std::vector<DegreeVerdict> verdicts(D);
        parallel_for(D, opts.parallelism,
                     [&](int j) { verdicts[j] = check_degree(j); });
        for (DegreeVerdict& v : verdicts) {
            if (!v.maximal) report.has_wlp = false;
            report.degrees.push_back(std::move(v));
        }
    } else {
        for (int j = 0; j < D; ++j) {
            DegreeVerdict v = check_degree(j);
            if (!v.maximal) report.has_wlp = false;
            report.degrees.push_back(std::move(v));
            if (!report.has_wlp && opts.fail_fast) break;
        }
    }
    report.total_seconds = seconds_since(t0);
    return report;
}

bool map_fails(const Graph& g, int d, FailureKind kind,
               const RankPolicy& policy) {
    if (kind == FailureKind::Both)
        throw std::invalid_argument("probe one property at a time");
    if (d < 0) throw std::invalid_argument("negative degree");

    UPoly series = independence_polynomial(g);
    int D = series.degree();
    BigInt h_d = series.coeff(d);
    BigInt h_d1 = series.coeff(d + 1);

    if (kind == FailureKind::Surjectivity) {
        if (h_d1 == 0) return false;  // onto the zero space
    } else {
        if (h_d == 0) return false;  // injective from the zero space
        if (h_d1 == 0) return true;  // nonzero space into the zero space
    }
    // Here 0 <= d < D, so the level map exists.
    (void)D;
    LevelMap map = level_map(g, d);
    RankCertificate cert = certified_rank(map.matrix, policy);
    BigInt rank = cert.rank;
    return kind == FailureKind::Surjectivity ? rank < h_d1 : rank < h_d;
}

bool tensor_failure_check(const Graph& g1, int i, const Graph& g2, int j,
                          FailureKind kind, const RankPolicy& policy) {
    if (kind == FailureKind::Both)
        throw std::invalid_argument("probe one property at a time");
    if (!map_fails(g1, i, kind, policy))
        throw std::invalid_argument(g1.name() + " does not fail " +
                                    to_string(kind) + " at degree " +
                                    std::to_string(i));
    if (!map_fails(g2, j, kind, policy))
        throw std::invalid_argument(g2.name() + " does not fail " +
                                    to_string(kind) + " at degree " +
                                    std::to_string(j));
    int target = kind == FailureKind::Surjectivity ? i + j + 1 : i + j;
    return map_fails(disjoint_union(g1, g2), target, kind, policy);
}

} // namespace wlp
