#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparse.hpp"
#include "upoly.hpp"

namespace wlp {

enum class RankEvidence {
    // Elimination mod a recorded prime reached min(rows, cols). Sound over
    // the rationals: rank mod p never exceeds the rational rank.
    FullRankModP,
    // Fraction-free integer elimination; unconditionally exact.
    ExactElimination,
    // An exact nonzero integer vector annihilated by the matrix (right:
    // M v = 0, proving rank < cols; left: v M = 0, proving rank < rows).
    KernelWitness,
};

enum class KernelSide { Right, Left };

std::string to_string(RankEvidence e);
std::string to_string(KernelSide s);

struct RankCertificate {
    int rank = 0;
    RankEvidence evidence = RankEvidence::ExactElimination;
    std::uint64_t prime = 0;  // FullRankModP: the certifying prime
    KernelSide side = KernelSide::Right;  // KernelWitness only
    std::vector<BigInt> witness;          // KernelWitness only
    std::vector<std::uint64_t> primes_used;
};

struct RankPolicy {
    std::uint64_t seed = 0;
    int extra_primes = 2;      // stability confirmations for deficient ranks
    int dense_threshold = 2000;  // max min-dimension for exact elimination
    int max_retries = 4;         // fresh-prime attempts before falling back
    double time_budget_seconds = 0;  // 0 = unlimited
};

// Raised when every strategy is exhausted without a sound verdict; the
// caller must raise thresholds or budgets rather than accept a guess.
class IndeterminateRank : public std::runtime_error {
public:
    explicit IndeterminateRank(const std::string& what)
        : std::runtime_error(what) {}
};

// Exact rational rank by fraction-free (Bareiss) elimination on a dense
// copy. Throws std::invalid_argument when min(rows, cols) exceeds the
// threshold; use certified_rank for larger matrices.
int rank_exact(const SparseIntMatrix& m, int dense_threshold = 2000);

// Certified rank: full rank mod a random prime is returned as a sound
// certificate directly; otherwise a kernel vector on the deficient side is
// lifted to an exact integer witness (CRT across random primes + rational
// reconstruction) and verified by exact multiplication before any
// deficient verdict is reported. Falls back to exact elimination, then
// raises IndeterminateRank.
RankCertificate certified_rank(const SparseIntMatrix& m,
                               const RankPolicy& policy = {});

// Re-checks a KernelWitness certificate by exact arithmetic (and accepts
// the other evidence kinds by re-running their cheap checks where
// possible). Used by report validation and the test suite.
bool verify_certificate(const SparseIntMatrix& m, const RankCertificate& c);

} // namespace wlp
