#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"
#include "upoly.hpp"

namespace wlp {

// Branch-vertex selection for the deletion recurrence. The result is
// independent of the choice; Seeded exists to test exactly that.
enum class BranchRule { MaxDegree, Seeded };

// Exact independence polynomial I(G;t) via the deletion recurrence
// I(G;t) = I(G\v;t) + t*I(G\N[v];t), with connected components split off
// and multiplied, and memoization keyed by the surviving-vertex mask.
UPoly independence_polynomial(const Graph& g,
                              BranchRule rule = BranchRule::MaxDegree,
                              uint64_t seed = 0);

// Oracle: counts independent subsets of every size by scanning all 2^n
// subsets. Rejects graphs with more than 25 vertices.
UPoly brute_force_independence_polynomial(const Graph& g);

struct IdentityCheck {
    std::string identity;
    int param;
    bool holds;
};

// Coefficientwise checks of the tadpole decomposition identities
//   I(T_{m,2}) = I(Pan_m) + t*I(C_m)
//   I(T_{m,3}) = (1+t)*I(Pan_m) + t*I(C_m)        for m in [m_lo, m_hi]
//   I(T_{4,n}) = I(C_{n+3}) + t*I(P_{n+2})
//   I(T_{5,n}) = I(T_{4,n}) + t*I(C_{n+3})        for n in [n_lo, n_hi]
// Requires m_lo >= 3 and n_lo >= 1.
std::vector<IdentityCheck> verify_decompositions(int m_lo, int m_hi,
                                                 int n_lo, int n_hi);

struct InequalityCheck {
    std::string statement;
    int param;
    bool holds;
};

// Mode inequalities and memberships for the path/cycle/pan mode sequences
// lambda_n, rho_n, zeta_n and the four tadpole families, each statement
// checked over [lo, hi] clamped to its own validity bound.
std::vector<InequalityCheck> verify_mode_inequalities(int lo, int hi);

} // namespace wlp
