#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sparse.hpp"

namespace wlp {

bool is_prime(std::uint64_t n);

// Uniform random prime in [2^61, 2^62); `state` is a splitmix64 stream
// position and advances with each draw.
std::uint64_t random_prime(std::uint64_t& state);

// Result of sparse Gaussian elimination over F_p. The pivot (row, col)
// pairs are listed in elimination order; the square submatrix of the input
// on those rows and columns has nonzero determinant mod p, hence nonzero
// determinant over the integers. That subminor is what later witness
// lifting relies on.
struct EliminationResult {
    std::uint64_t prime = 0;
    std::vector<int> pivot_rows;
    std::vector<int> pivot_cols;

    int rank() const { return static_cast<int>(pivot_rows.size()); }

    // Pivot rows as fully reduced sparse rows (original column ids, values
    // in [1, p)): row k has no entry in pivot columns 0..k-1, so the system
    // is triangular in elimination order and supports back-substitution.
    std::vector<std::vector<std::pair<int, std::uint64_t>>> reduced_rows;

    // Kernel vector of the eliminated matrix with free column f set to 1
    // and all other non-pivot columns set to 0. Requires f to not be a
    // pivot column.
    std::vector<std::uint64_t> kernel_vector(int cols, int f) const;
};

// Sparse Gaussian elimination mod p with min-count pivot selection
// (shortest active row, then least-populated column) and a dense fallback
// once the active block saturates. p must be an odd prime; validated.
// Columns >= pivotable_cols are never chosen as pivots (used to carry
// right-hand sides through the same elimination); default allows all.
// keep_reduced_rows=false skips storing the reduced rows when only the
// rank and pivot positions are needed.
EliminationResult eliminate_mod_p(const SparseIntMatrix& m, std::uint64_t p,
                                  int pivotable_cols = -1,
                                  bool keep_reduced_rows = true);

int rank_mod_p(const SparseIntMatrix& m, std::uint64_t p);

} // namespace wlp
