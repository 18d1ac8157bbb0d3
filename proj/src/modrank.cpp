#include "modrank.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace wlp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) {
#if defined(__x86_64__) && defined(__GNUC__)
    // a*b / p fits in 64 bits because a, b < p < 2^63.
    u64 q, r;
    __asm__("mulq %3\n\t"
            "divq %4"
            : "=&a"(q), "=&d"(r)
            : "0"(a), "rm"(b), "rm"(p)
            : "cc");
    return r;
#else
    return static_cast<u64>(static_cast<u128>(a) * b % p);
#endif
}

inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;  // a, b < p < 2^63: no overflow
    return s >= p ? s - p : s;
}

inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce_entry(std::int64_t v, u64 p) {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return static_cast<u64>(m);
}

u64 splitmix64(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin witness set for all 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 random_prime(u64& state) {
    for (;;) {
        u64 c = (splitmix64(state) >> 3) | (1ull << 61) | 1ull;
        if (is_prime(c)) return c;
    }
}

std::vector<u64> EliminationResult::kernel_vector(int cols, int f) const {
    const u64 p = prime;
    std::vector<u64> x(cols, 0);
    x[f] = 1;
    for (int k = rank() - 1; k >= 0; --k) {
        int c = pivot_cols[k];
        if (c == f) throw std::logic_error("free column is a pivot column");
        u64 acc = 0;
        u64 diag = 0;
        for (const auto& [col, val] : reduced_rows[k]) {
            if (col == c)
                diag = val;
            else if (x[col] != 0)
                acc = addmod(acc, mulmod(val, x[col], p), p);
        }
        x[c] = mulmod(submod(0, acc, p), invmod(diag, p), p);
    }
    return x;
}

namespace {

using SparseRow = std::vector<std::pair<int, u64>>;

// Montgomery arithmetic for a fixed odd modulus p < 2^62. Values live in
// Montgomery form (a*2^64 mod p) throughout an elimination, which keeps the
// inner loops free of hardware division.
class Montgomery {
public:
    explicit Montgomery(u64 p) : p_(p) {
        u64 inv = p;  // Newton doubling: exact inverse of p mod 2^64
        for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
        ninv_ = ~inv + 1;
        r1_ = (~0ull % p) + 1;  // 2^64 mod p; never p itself for odd p > 1
        r2_ = mulmod(r1_, r1_, p);
    }

    u64 modulus() const { return p_; }
    u64 to(u64 a) const { return mul(a, r2_); }
    u64 from(u64 a) const { return mul(a, 1); }

    u64 mul(u64 a, u64 b) const {
        u128 t = static_cast<u128>(a) * b;
        u64 m = static_cast<u64>(t) * ninv_;
        u64 r = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
        return r >= p_ ? r - p_ : r;
    }

    u64 pow(u64 a, u64 e) const {
        u64 acc = r1_;
        while (e) {
            if (e & 1) acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    }

    u64 inv(u64 a) const { return pow(a, p_ - 2); }

private:
    u64 p_, ninv_, r1_, r2_;
};

// Active-block state once the sparse phase saturates: a dense row-major
// matrix over the still-active rows and columns.
class DenseBlock {
public:
    DenseBlock(const std::vector<SparseRow>& rows,
               const std::vector<int>& active_rows,
               const std::vector<int>& active_cols, int total_cols)
        : row_ids_(active_rows), col_ids_(active_cols) {
        col_pos_.assign(total_cols, -1);
        for (size_t i = 0; i < col_ids_.size(); ++i)
            col_pos_[col_ids_[i]] = static_cast<int>(i);
        data_.assign(row_ids_.size() * col_ids_.size(), 0);
        for (size_t i = 0; i < row_ids_.size(); ++i)
            for (const auto& [c, v] : rows[row_ids_[i]])
                data_[i * col_ids_.size() + col_pos_[c]] = v;
    }

    // Gauss-Jordan over the block: each pivot clears its column in every
    // other row, so recorded pivot rows stay genuine row-space vectors of
    // the original matrix (required by back-substitution). Only the first
    // `pivotable` block columns may host pivots; trailing carried columns
    // are updated but never pivoted on. Values are in Montgomery form.
    void eliminate(const Montgomery& mont, EliminationResult& out,
                   size_t pivotable, bool keep_reduced_rows) {
        const u64 p = mont.modulus();
        size_t nr = row_ids_.size(), nc = col_ids_.size();
        std::vector<bool> row_done(nr, false);
        for (size_t c = 0; c < pivotable; ++c) {
            size_t pr = nr;
            for (size_t r = 0; r < nr; ++r)
                if (!row_done[r] && data_[r * nc + c] != 0) {
                    pr = r;
                    break;
                }
            if (pr == nr) continue;
            row_done[pr] = true;
            out.pivot_rows.push_back(row_ids_[pr]);
            out.pivot_cols.push_back(col_ids_[c]);
            pivot_block_rows_.push_back(pr);
            u64* prow = &data_[pr * nc];
            u64 inv = mont.inv(prow[c]);
            for (size_t r = 0; r < nr; ++r) {
                if (r == pr) continue;
                u64* row = &data_[r * nc];
                if (row[c] == 0) continue;
                u64 factor = mont.mul(row[c], inv);
                for (size_t k = 0; k < nc; ++k)
                    if (prow[k] != 0)
                        row[k] = submod(row[k], mont.mul(factor, prow[k]), p);
            }
        }
        if (!keep_reduced_rows) return;
        for (size_t pr : pivot_block_rows_) {
            SparseRow reduced;
            const u64* row = &data_[pr * nc];
            for (size_t k = 0; k < nc; ++k)
                if (row[k] != 0)
                    reduced.emplace_back(col_ids_[k], mont.from(row[k]));
            out.reduced_rows.push_back(std::move(reduced));
        }
    }

private:
    std::vector<int> row_ids_, col_ids_;
    std::vector<int> col_pos_;
    std::vector<size_t> pivot_block_rows_;
    std::vector<u64> data_;
};

class SparseElimination {
public:
    SparseElimination(const SparseIntMatrix& m, u64 p, int pivotable_cols,
                      bool keep_reduced_rows)
        : p_(p), mont_(p), ncols_(m.cols()),
          pivot_limit_(pivotable_cols < 0 ? m.cols() : pivotable_cols),
          keep_reduced_rows_(keep_reduced_rows) {
        rows_.assign(m.rows(), {});
        for (const MatrixEntry& e : m.entries()) {
            u64 v = reduce_entry(e.value, p);
            if (v != 0) rows_[e.row].emplace_back(e.col, mont_.to(v));
        }
        for (auto& row : rows_)
            std::sort(row.begin(), row.end());
        active_.assign(m.rows(), true);
        col_count_.assign(ncols_, 0);
        col_rows_.assign(ncols_, {});
        nnz_active_ = 0;
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty()) {
                active_[r] = false;
                continue;
            }
            nnz_active_ += rows_[r].size();
            for (const auto& [c, v] : rows_[r]) {
                ++col_count_[c];
                col_rows_[c].push_back(static_cast<int>(r));
            }
        }
        active_row_count_ = 0;
        for (bool a : active_)
            if (a) ++active_row_count_;
    }

    EliminationResult run() {
        EliminationResult out;
        out.prime = p_;
        for (;;) {
            if (should_densify()) {
                densify_into(out);
                return out;
            }
            int pr = pick_pivot_row();
            if (pr < 0) return out;
            int pc = pick_pivot_col(rows_[pr]);
            eliminate_step(pr, pc);
            out.pivot_rows.push_back(pr);
            out.pivot_cols.push_back(pc);
            if (keep_reduced_rows_) {
                SparseRow reduced = rows_[pr];
                for (auto& [c, v] : reduced) v = mont_.from(v);
                out.reduced_rows.push_back(std::move(reduced));
            }
        }
    }

private:
    bool should_densify() const {
        if (active_row_count_ == 0) return false;
        int active_cols = 0;
        for (int c = 0; c < pivot_limit_; ++c)
            if (col_count_[c] > 0) ++active_cols;
        if (active_cols == 0) return false;
        double cells = static_cast<double>(active_row_count_) * active_cols;
        return cells <= 16e6 &&
               static_cast<double>(nnz_active_) > 0.18 * cells;
    }

    void densify_into(EliminationResult& out) {
        std::vector<int> arows, acols;
        for (size_t r = 0; r < rows_.size(); ++r)
            if (active_[r]) arows.push_back(static_cast<int>(r));
        // Pivotable columns first so the rank search covers them; carried
        // right-hand-side columns ride along at the end.
        std::vector<bool> seen(ncols_, false);
        for (int r : arows)
            for (const auto& [c, v] : rows_[r]) seen[c] = true;
        for (int c = 0; c < pivot_limit_; ++c)
            if (seen[c]) acols.push_back(c);
        size_t pivotable = acols.size();
        for (int c = pivot_limit_; c < ncols_; ++c)
            if (seen[c]) acols.push_back(c);
        DenseBlock block(rows_, arows, acols, ncols_);
        // Free the sparse state before the dense sweep.
        for (int r : arows) {
            rows_[r].clear();
            rows_[r].shrink_to_fit();
        }
        block.eliminate(mont_, out, pivotable, keep_reduced_rows_);
    }

    int pick_pivot_row() const {
        int best = -1;
        size_t best_len = SIZE_MAX;
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (!active_[r]) continue;
            size_t len = pivotable_len(rows_[r]);
            if (len > 0 && len < best_len) {
                best_len = len;
                best = static_cast<int>(r);
                if (best_len == 1) break;
            }
        }
        return best;
    }

    size_t pivotable_len(const SparseRow& row) const {
        if (pivot_limit_ == ncols_) return row.size();
        // Carried columns sort last; walk back over them.
        size_t n = row.size();
        while (n > 0 && row[n - 1].first >= pivot_limit_) --n;
        return n;
    }

    int pick_pivot_col(const SparseRow& row) const {
        int best = -1;
        int best_count = INT_MAX;
        for (const auto& [c, v] : row)
            if (c < pivot_limit_ && col_count_[c] < best_count) {
                best_count = col_count_[c];
                best = c;
            }
        return best;
    }

    void eliminate_step(int pr, int pc) {
        const SparseRow& prow = rows_[pr];
        u64 pval = 0;
        for (const auto& [c, v] : prow)
            if (c == pc) pval = v;
        u64 pinv = mont_.inv(pval);

        std::vector<int> victims;
        for (int r : col_rows_[pc])
            if (r != pr && active_[r]) victims.push_back(r);
        std::sort(victims.begin(), victims.end());
        victims.erase(std::unique(victims.begin(), victims.end()),
                      victims.end());

        for (int r : victims) {
            u64 rv = value_at(rows_[r], pc);
            if (rv == 0) continue;  // stale incidence entry
            axpy_rows(r, mont_.mul(rv, pinv), prow);
        }
        deactivate(pr);
        col_rows_[pc].clear();
    }

    static u64 value_at(const SparseRow& row, int col) {
        auto it = std::lower_bound(
            row.begin(), row.end(), col,
            [](const std::pair<int, u64>& e, int c) { return e.first < c; });
        return it != row.end() && it->first == col ? it->second : 0;
    }

    // rows_[r] -= factor * prow (mod p), maintaining counts and incidence.
    void axpy_rows(int r, u64 factor, const SparseRow& prow) {
        SparseRow& row = rows_[r];
        SparseRow& merged = scratch_;
        merged.clear();
        merged.reserve(row.size() + prow.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < prow.size()) {
            if (j == prow.size() ||
                (i < row.size() && row[i].first < prow[j].first)) {
                merged.push_back(row[i++]);
            } else if (i == row.size() || row[i].first > prow[j].first) {
                u64 v = submod(0, mont_.mul(factor, prow[j].second), p_);
                int c = prow[j].first;
                ++j;
                if (v != 0) {
                    merged.emplace_back(c, v);
                    ++col_count_[c];
                    col_rows_[c].push_back(r);
                }
            } else {
                u64 v = submod(row[i].second, mont_.mul(factor, prow[j].second),
                               p_);
                int c = row[i].first;
                ++i;
                ++j;
                if (v != 0)
                    merged.emplace_back(c, v);
                else
                    --col_count_[c];
            }
        }
        nnz_active_ += merged.size();
        nnz_active_ -= row.size();
        std::swap(row, merged);
        if (row.empty()) deactivate(r);
    }

    void deactivate(int r) {
        if (!active_[r]) return;
        active_[r] = false;
        --active_row_count_;
        nnz_active_ -= rows_[r].size();
        for (const auto& [c, v] : rows_[r]) --col_count_[c];
    }

    u64 p_;
    Montgomery mont_;
    int ncols_;
    int pivot_limit_;
    bool keep_reduced_rows_ = true;
    SparseRow scratch_;
    std::vector<SparseRow> rows_;
    std::vector<bool> active_;
    std::vector<int> col_count_;
    std::vector<std::vector<int>> col_rows_;
    std::size_t nnz_active_ = 0;
    int active_row_count_ = 0;
};

} // namespace

EliminationResult eliminate_mod_p(const SparseIntMatrix& m, u64 p,
                                  int pivotable_cols, bool keep_reduced_rows) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("modulus must be an odd prime");
    return SparseElimination(m, p, pivotable_cols, keep_reduced_rows).run();
}

int rank_mod_p(const SparseIntMatrix& m, u64 p) {
    return eliminate_mod_p(m, p, -1, false).rank();
}

} // namespace wlp
