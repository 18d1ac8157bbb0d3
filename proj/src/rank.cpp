#include "rank.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "modrank.hpp"

namespace wlp {

std::string to_string(RankEvidence e) {
    switch (e) {
        case RankEvidence::FullRankModP: return "FULL_RANK_MOD_P";
        case RankEvidence::ExactElimination: return "EXACT_ELIMINATION";
        case RankEvidence::KernelWitness: return "KERNEL_WITNESS";
    }
    return "?";
}

std::string to_string(KernelSide s) {
    return s == KernelSide::Right ? "right" : "left";
}

int rank_exact(const SparseIntMatrix& m, int dense_threshold) {
    int nr = m.rows(), nc = m.cols();
    if (std::min(nr, nc) > dense_threshold)
        throw std::invalid_argument(
            "matrix too large for exact elimination; use certified_rank");
    if (nr == 0 || nc == 0) return 0;

    std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc));
    for (const MatrixEntry& e : m.entries()) a[e.row][e.col] = e.value;

    BigInt prev = 1, t1, t2;
    int rank = 0;
    int maxrank = std::min(nr, nc);
    while (rank < maxrank) {
        int pr = -1, pc = -1;
        for (int i = rank; i < nr && pr < 0; ++i)
            for (int j = rank; j < nc; ++j)
                if (a[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(a[rank], a[pr]);
        if (pc != rank)
            for (int i = 0; i < nr; ++i) std::swap(a[i][rank], a[i][pc]);

        // One fraction-free step: every 2x2 minor against the pivot,
        // divided exactly by the previous pivot.
        const BigInt& piv = a[rank][rank];
        for (int i = rank + 1; i < nr; ++i) {
            for (int j = rank + 1; j < nc; ++j) {
                t1 = a[i][j] * piv;
                t2 = a[i][rank] * a[rank][j];
                t1 -= t2;
                mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[i][rank] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

namespace {

using u64 = std::uint64_t;

u64 mulmod_u64(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 powmod_u64(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod_u64(u64 a, u64 p) { return powmod_u64(a, p - 2, p); }

BigInt big_from_u64(u64 v) {
    return BigInt(static_cast<unsigned long>(v));  // 64-bit long on this ABI
}

// x' with x' ≡ x (mod modulus), x' ≡ residue (mod q), 0 ≤ x' < modulus·q.
void crt_update(BigInt& x, const BigInt& modulus, u64 residue, u64 q) {
    u64 xq = mpz_fdiv_ui(x.get_mpz_t(), q);
    u64 mq = mpz_fdiv_ui(modulus.get_mpz_t(), q);
    u64 diff = residue >= xq ? residue - xq : residue + q - xq;
    u64 k = mulmod_u64(diff, invmod_u64(mq, q), q);
    x += modulus * big_from_u64(k);
}

struct Rational {
    BigInt num, den;
};

// Wang-style rational reconstruction of u mod M with numerator and
// denominator bounded by sqrt((M-1)/2). The caller verifies the final
// vector exactly, so a spurious candidate only costs another prime.
bool rational_reconstruct(const BigInt& u, const BigInt& M, Rational& out) {
    BigInt bound = sqrt((M - 1) / 2);
    BigInt r0 = M, t0 = 0, r1 = u, t1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt rn = r0 - q * r1;
        r0 = r1;
        r1 = rn;
        BigInt tn = t0 - q * t1;
        t0 = t1;
        t1 = tn;
    }
    if (t1 == 0) return false;
    BigInt num = r1, den = t1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return false;
    if (gcd(num, den) != 1) return false;
    out = {num, den};
    return true;
}

bool is_zero_vector(const std::vector<BigInt>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const BigInt& x) { return x == 0; });
}

// Exact check that w is a right-kernel vector of W.
bool right_kernel_ok(const SparseIntMatrix& W, const std::vector<BigInt>& w) {
    if (static_cast<int>(w.size()) != W.cols()) return false;
    if (is_zero_vector(w)) return false;
    std::vector<BigInt> acc(W.rows());
    for (const MatrixEntry& e : W.entries())
        if (w[e.col] != 0) acc[e.row] += BigInt(e.value) * w[e.col];
    return is_zero_vector(acc);
}

class Deadline {
public:
    explicit Deadline(double seconds) {
        if (seconds > 0)
            at_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds));
    }
    bool expired() const {
        return at_ && std::chrono::steady_clock::now() > *at_;
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

// Subsystem for witness lifting: the rows are the pivot rows of W, the
// first r columns are the pivot columns (in pivot order) and the last
// column is the free column. Its left r×r block is nonsingular over Q
// because elimination mod the first prime certified a nonzero minor.
SparseIntMatrix lift_subsystem(const SparseIntMatrix& W,
                               const std::vector<int>& pivot_rows,
                               const std::vector<int>& pivot_cols, int f) {
    int r = static_cast<int>(pivot_rows.size());
    std::vector<int> row_pos(W.rows(), -1), col_pos(W.cols(), -1);
    for (int i = 0; i < r; ++i) row_pos[pivot_rows[i]] = i;
    for (int i = 0; i < r; ++i) col_pos[pivot_cols[i]] = i;
    std::vector<MatrixEntry> entries;
    for (const MatrixEntry& e : W.entries()) {
        if (row_pos[e.row] < 0) continue;
        if (col_pos[e.col] >= 0)
            entries.push_back({row_pos[e.row], col_pos[e.col], e.value});
        else if (e.col == f)
            entries.push_back({row_pos[e.row], r, e.value});
    }
    return SparseIntMatrix(r, r + 1, std::move(entries));
}

// Lift the mod-p kernel candidate from `first` to an exact integer witness
// of W by CRT over fresh primes plus rational reconstruction; nullopt if no
// verified witness emerges within the prime budget.
std::optional<std::vector<BigInt>> lift_kernel_witness(
    const SparseIntMatrix& W, const EliminationResult& first, u64& state,
    std::vector<u64>& primes_used, const Deadline& deadline) {
    int r = first.rank();
    int f = -1;
    {
        std::vector<bool> is_pivot(W.cols(), false);
        for (int c : first.pivot_cols) is_pivot[c] = true;
        for (int c = 0; c < W.cols(); ++c)
            if (!is_pivot[c]) {
                f = c;
                break;
            }
    }
    if (f < 0) return std::nullopt;

    // Residues of the rational solution z of B z = -rhs, per pivot column,
    // seeded from the first elimination's own back-substitution.
    std::vector<u64> x0 = first.kernel_vector(W.cols(), f);
    std::vector<BigInt> residue(r);
    for (int i = 0; i < r; ++i) residue[i] = big_from_u64(x0[first.pivot_cols[i]]);
    BigInt modulus = big_from_u64(first.prime);

    SparseIntMatrix sub = lift_subsystem(W, first.pivot_rows, first.pivot_cols, f);

    constexpr int kMaxCrtPrimes = 48;
    for (int used = 1; used <= kMaxCrtPrimes; ++used) {
        // Attempt reconstruction with the current modulus.
        std::vector<Rational> coords(r);
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            ok = rational_reconstruct(residue[i], modulus, coords[i]);
        if (ok) {
            BigInt denom_lcm = 1;
            for (const Rational& c : coords)
                denom_lcm = lcm(denom_lcm, c.den);
            std::vector<BigInt> w(W.cols());
            w[f] = denom_lcm;
            for (int i = 0; i < r; ++i)
                w[first.pivot_cols[i]] = coords[i].num * (denom_lcm / coords[i].den);
            BigInt content = 0;
            for (const BigInt& x : w)
                if (x != 0) content = gcd(content, x);
            for (BigInt& x : w) x /= content;
            for (const BigInt& x : w) {
                if (x == 0) continue;
                if (x < 0)
                    for (BigInt& y : w) y = -y;
                break;
            }
            if (right_kernel_ok(W, w)) return w;
        }
        if (deadline.expired()) return std::nullopt;

        // Another prime for the subsystem solve.
        u64 q = random_prime(state);
        primes_used.push_back(q);
        EliminationResult eq = eliminate_mod_p(sub, q, r);
        if (eq.rank() < r) continue;  // q divides the certified minor; skip
        std::vector<u64> zq = eq.kernel_vector(r + 1, r);
        for (int i = 0; i < r; ++i) crt_update(residue[i], modulus, zq[i], q);
        modulus *= big_from_u64(q);
    }
    return std::nullopt;
}

} // namespace

RankCertificate certified_rank(const SparseIntMatrix& m,
                               const RankPolicy& policy) {
    Deadline deadline(policy.time_budget_seconds);
    int minrc = std::min(m.rows(), m.cols());
    u64 state = policy.seed;

    if (minrc == 0) {
        RankCertificate c;
        c.rank = 0;
        c.evidence = RankEvidence::FullRankModP;
        c.prime = random_prime(state);
        c.primes_used = {c.prime};
        return c;
    }

    // Work on the orientation whose columns are the short side, so a right
    // kernel of W proves rank < min(rows, cols).
    bool transposed = m.cols() > m.rows();
    SparseIntMatrix W = transposed ? m.transposed() : m;

    std::vector<u64> primes_used;
    for (int attempt = 0; attempt < policy.max_retries; ++attempt) {
        if (attempt > 0 && deadline.expired()) break;
        u64 p = random_prime(state);
        primes_used.push_back(p);
        EliminationResult first = eliminate_mod_p(W, p);
        int r1 = first.rank();
        if (r1 == minrc) {
            RankCertificate c;
            c.rank = r1;
            c.evidence = RankEvidence::FullRankModP;
            c.prime = p;
            c.primes_used = std::move(primes_used);
            return c;
        }

        auto witness =
            lift_kernel_witness(W, first, state, primes_used, deadline);
        if (!witness) continue;

        bool stable = true;
        for (int i = 0; i < policy.extra_primes; ++i) {
            u64 q = random_prime(state);
            primes_used.push_back(q);
            if (rank_mod_p(W, q) != r1) {
                stable = false;
                break;
            }
        }
        if (!stable) continue;

        RankCertificate c;
        c.rank = r1;
        c.evidence = RankEvidence::KernelWitness;
        c.side = transposed ? KernelSide::Left : KernelSide::Right;
        c.witness = std::move(*witness);
        c.primes_used = std::move(primes_used);
        return c;
    }

    if (minrc <= policy.dense_threshold) {
        RankCertificate c;
        c.rank = rank_exact(m, policy.dense_threshold);
        c.evidence = RankEvidence::ExactElimination;
        c.primes_used = std::move(primes_used);
        return c;
    }
    throw IndeterminateRank(
        "rank not certified within the retry and time budget; raise "
        "dense_threshold, retries, or the time budget");
}

bool verify_certificate(const SparseIntMatrix& m, const RankCertificate& c) {
    switch (c.evidence) {
        case RankEvidence::FullRankModP:
            if (c.rank != std::min(m.rows(), m.cols())) return false;
            if (c.rank == 0) return true;
            return rank_mod_p(m, c.prime) == c.rank;
        case RankEvidence::ExactElimination:
            try {
                return rank_exact(m) == c.rank;
            } catch (const std::invalid_argument&) {
                return false;
            }
        case RankEvidence::KernelWitness:
            return c.side == KernelSide::Right
                       ? right_kernel_ok(m, c.witness)
                       : right_kernel_ok(m.transposed(), c.witness);
    }
    return false;
}

} // namespace wlp
