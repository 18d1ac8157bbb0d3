#include "sparse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wlp {

SparseIntMatrix::SparseIntMatrix(int rows, int cols,
                                 std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
    std::erase_if(entries_, [](const MatrixEntry& e) { return e.value == 0; });
    for (const MatrixEntry& e : entries_)
        if (e.row < 0 || e.row >= rows_ || e.col < 0 || e.col >= cols_)
            throw std::invalid_argument("matrix entry out of range");
    std::sort(entries_.begin(), entries_.end(),
              [](const MatrixEntry& a, const MatrixEntry& b) {
                  return a.col != b.col ? a.col < b.col : a.row < b.row;
              });
    for (size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1].row == entries_[i].row &&
            entries_[i - 1].col == entries_[i].col)
            throw std::invalid_argument("duplicate matrix entry");
}

SparseIntMatrix SparseIntMatrix::transposed() const {
    std::vector<MatrixEntry> flipped;
    flipped.reserve(entries_.size());
    for (const MatrixEntry& e : entries_)
        flipped.push_back({e.col, e.row, e.value});
    return SparseIntMatrix(cols_, rows_, std::move(flipped));
}

std::string SparseIntMatrix::dump() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << ' ' << nnz() << '\n';
    for (const MatrixEntry& e : entries_)
        out << e.row << ' ' << e.col << '\n';
    return out.str();
}

} // namespace wlp
