#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wlp {

struct MatrixEntry {
    int row = 0;
    int col = 0;
    std::int64_t value = 0;

    bool operator==(const MatrixEntry&) const = default;
};

// Sparse integer matrix in coordinate form. Entries are kept sorted
// column-major (by column, then row) with no duplicate positions and no
// stored zeros. Level maps only ever hold the value 1; the rank routines
// accept arbitrary small integers so they can be property-tested on random
// matrices.
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    // Validates index ranges and duplicates; sorts entries column-major.
    SparseIntMatrix(int rows, int cols, std::vector<MatrixEntry> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t nnz() const { return static_cast<std::int64_t>(entries_.size()); }
    const std::vector<MatrixEntry>& entries() const { return entries_; }

    SparseIntMatrix transposed() const;

    // Debug/oracle text form: "rows cols nnz" header, then one "r c" pair
    // per line in stored (column-major) order, 0-based.
    std::string dump() const;

    bool operator==(const SparseIntMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<MatrixEntry> entries_;
};

} // namespace wlp
