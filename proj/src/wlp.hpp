#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "levels.hpp"
#include "rank.hpp"
#include "upoly.hpp"

namespace wlp {

enum class FailureKind { Injectivity, Surjectivity, Both };

std::string to_string(FailureKind k);

// Verdict for the multiplication map out of degree j: maximal rank or not,
// and if not, which side fails. The certificate carries the proof.
struct DegreeVerdict {
    int j = 0;
    int h_j = 0;
    int h_j1 = 0;
    int rank = 0;
    bool maximal = false;
    std::optional<FailureKind> failure_kind;
    RankCertificate certificate;
    double seconds = 0;
};

struct WlpReport {
    std::string graph_name;
    int n = 0;
    HilbertData hilbert;
    ModeReport mode;
    std::vector<DegreeVerdict> degrees;  // j = 0..D-1 (shorter with fail_fast)
    bool has_wlp = false;
    std::uint64_t seed = 0;
    double total_seconds = 0;

    std::optional<int> fail_degree() const;
    std::optional<FailureKind> fail_kind() const;
};

struct WlpOptions {
    RankPolicy policy;
    bool fail_fast = false;
    int parallelism = 1;
};

// Decides the weak Lefschetz property of A(g) by certifying the rank of
// every level map. Each degree draws its prime stream from a seed derived
// from policy.seed and the degree, so runs are reproducible and degrees
// are independent. Throws IndeterminateRank (tagged with the degree) only
// if a rank cannot be certified.
WlpReport wlp_check(const Graph& g, const WlpOptions& opts = {});

// Raw one-sided probe: does multiplication out of degree d fail the given
// property (kind must be Injectivity or Surjectivity)? Degrees at or past
// the socle map into the zero space: never a surjectivity failure, an
// injectivity failure exactly when h_d > 0.
bool map_fails(const Graph& g, int d, FailureKind kind,
               const RankPolicy& policy = {});

// Checks the propagation of a one-sided failure to a disjoint union: given
// that g1 fails `kind` at degree i and g2 fails it at degree j (verified;
// std::invalid_argument when the premise does not hold), reports whether
// the union fails `kind` at degree i+j+1 (surjectivity) or i+j
// (injectivity), which the tensor structure of the union predicts always.
bool tensor_failure_check(const Graph& g1, int i, const Graph& g2, int j,
                          FailureKind kind, const RankPolicy& policy = {});

} // namespace wlp
