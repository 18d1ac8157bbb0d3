#include <doctest.h>

#include <random>
#include <stdexcept>

#include "graph.hpp"
#include "levels.hpp"
#include "modrank.hpp"
#include "rank.hpp"

using namespace wlp;

namespace {

SparseIntMatrix identity_pattern(int k) {
    std::vector<MatrixEntry> e;
    for (int i = 0; i < k; ++i) e.push_back({i, i, 1});
    return SparseIntMatrix(k, k, std::move(e));
}

SparseIntMatrix ones_column(int n) {
    std::vector<MatrixEntry> e;
    for (int i = 0; i < n; ++i) e.push_back({i, 0, 1});
    return SparseIntMatrix(n, 1, std::move(e));
}

SparseIntMatrix random_matrix(int rows, int cols, double density, int maxabs,
                              std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> val(-maxabs, maxabs);
    std::vector<MatrixEntry> e;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng) < density) {
                int v = val(rng);
                if (v != 0) e.push_back({r, c, v});
            }
    return SparseIntMatrix(rows, cols, std::move(e));
}

// Product of random 0/1 factors: rank at most `inner`.
SparseIntMatrix planted_product(int rows, int cols, int inner,
                                std::mt19937_64& rng) {
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<std::vector<int>> a(rows, std::vector<int>(inner));
    std::vector<std::vector<int>> b(inner, std::vector<int>(cols));
    for (auto& row : a)
        for (int& x : row) x = bit(rng);
    for (auto& row : b)
        for (int& x : row) x = bit(rng);
    std::vector<MatrixEntry> e;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            std::int64_t s = 0;
            for (int k = 0; k < inner; ++k) s += a[r][k] * b[k][c];
            if (s != 0) e.push_back({r, c, s});
        }
    return SparseIntMatrix(rows, cols, std::move(e));
}

constexpr std::uint64_t kTestPrime = 1000003;

} // namespace

TEST_CASE("primality testing") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(4));
    CHECK(is_prime(1000003));
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(561));      // Carmichael
    CHECK_FALSE(is_prime(1000001)); // 101 * 9901
    CHECK(is_prime((1ull << 61) - 1));  // Mersenne
    CHECK_FALSE(is_prime((1ull << 62) - 1));
}

TEST_CASE("random primes live in the configured window") {
    std::uint64_t state = 42;
    std::uint64_t first = 0;
    for (int i = 0; i < 8; ++i) {
        std::uint64_t p = random_prime(state);
        if (i == 0) first = p;
        CHECK(p >= (1ull << 61));
        CHECK(p < (1ull << 62));
        CHECK(is_prime(p));
    }
    std::uint64_t replay = 42;
    CHECK(random_prime(replay) == first);
}

TEST_CASE("rank mod p basics") {
    CHECK(rank_mod_p(ones_column(7), kTestPrime) == 1);
    CHECK(rank_mod_p(SparseIntMatrix(4, 5, {}), kTestPrime) == 0);
    CHECK(rank_mod_p(identity_pattern(9), kTestPrime) == 9);
    CHECK(rank_mod_p(level_map(cycle(4), 1).matrix, kTestPrime) == 2);
    CHECK_THROWS_AS(rank_mod_p(identity_pattern(2), 1000001),
                    std::invalid_argument);
    CHECK_THROWS_AS(rank_mod_p(identity_pattern(2), 2), std::invalid_argument);
}

TEST_CASE("exact rank basics") {
    CHECK(rank_exact(level_map(path(3), 1).matrix) == 1);
    CHECK(rank_exact(level_map(cycle(4), 1).matrix) == 2);
    CHECK(rank_exact(identity_pattern(12)) == 12);
    CHECK(rank_exact(SparseIntMatrix(3, 3, {})) == 0);

    // All-ones 3x3 has rank 1.
    std::vector<MatrixEntry> ones;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) ones.push_back({r, c, 1});
    CHECK(rank_exact(SparseIntMatrix(3, 3, std::move(ones))) == 1);

    // A matrix that is full-rank over Q but singular mod small primes:
    // diag(2, 3) with the tiny window this stays exact.
    CHECK(rank_exact(SparseIntMatrix(2, 2, {{0, 0, 2}, {1, 1, 3}})) == 2);

    CHECK_THROWS_AS(rank_exact(identity_pattern(5), 3), std::invalid_argument);
}

TEST_CASE("kernel back-substitution produces a mod-p kernel vector") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        SparseIntMatrix m = planted_product(10, 13, 5, rng);
        std::uint64_t state = 100 + trial;
        std::uint64_t p = random_prime(state);
        EliminationResult e = eliminate_mod_p(m, p);
        REQUIRE(e.rank() < 13);
        std::vector<bool> is_pivot(m.cols(), false);
        for (int c : e.pivot_cols) is_pivot[c] = true;
        int f = 0;
        while (is_pivot[f]) ++f;
        std::vector<std::uint64_t> x = e.kernel_vector(m.cols(), f);
        CHECK(x[f] == 1);
        std::vector<unsigned __int128> acc(m.rows(), 0);
        for (const MatrixEntry& en : m.entries()) {
            std::uint64_t v =
                en.value >= 0 ? en.value % p : p - (-en.value) % p;
            acc[en.row] += static_cast<unsigned __int128>(v) % p *
                           (x[en.col] % p) % p;
        }
        for (auto a : acc) CHECK(static_cast<std::uint64_t>(a % p) == 0);
    }
}

TEST_CASE("modular and exact ranks agree on random matrices") {
    std::mt19937_64 rng(2024);
    std::uint64_t state = 90;
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 24);
        int cols = 1 + static_cast<int>(rng() % 24);
        double density = 0.1 + 0.5 * (trial % 5) / 5.0;
        SparseIntMatrix m = random_matrix(rows, cols, density, 3, rng);
        int exact = rank_exact(m);
        std::uint64_t p = random_prime(state);
        int modular = rank_mod_p(m, p);
        CHECK(modular <= exact);  // always sound
        CHECK(modular == exact);  // and equal for a fresh 61-bit prime
        CHECK(rank_exact(m.transposed()) == exact);
    }
}

TEST_CASE("planted products never exceed the planted rank") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        int inner = 1 + static_cast<int>(rng() % 6);
        SparseIntMatrix m = planted_product(12, 15, inner, rng);
        int exact = rank_exact(m);
        CHECK(exact <= inner);
        CHECK(rank_mod_p(m, kTestPrime) <= exact);
    }
}

TEST_CASE("certified full rank") {
    // The degree-2 map of the 10-path is 56x36 of full column rank.
    SparseIntMatrix m = level_map(path(10), 2).matrix;
    CHECK(m.rows() == 56);
    CHECK(m.cols() == 36);
    RankCertificate c = certified_rank(m, {.seed = 11});
    CHECK(c.rank == 36);
    CHECK(c.evidence == RankEvidence::FullRankModP);
    CHECK(is_prime(c.prime));
    CHECK(verify_certificate(m, c));
}

TEST_CASE("certified deficiency carries a verified witness") {
    std::mt19937_64 rng(31);

    SUBCASE("square") {
        SparseIntMatrix m = planted_product(9, 9, 4, rng);
        REQUIRE(rank_exact(m) < 9);
        RankCertificate c = certified_rank(m, {.seed = 3});
        CHECK(c.rank == rank_exact(m));
        REQUIRE(c.evidence == RankEvidence::KernelWitness);
        CHECK(c.side == KernelSide::Right);
        CHECK(verify_certificate(m, c));
    }

    SUBCASE("wide matrices get a right witness after transposing inside") {
        SparseIntMatrix m = planted_product(5, 11, 3, rng);
        RankCertificate c = certified_rank(m, {.seed = 4});
        CHECK(c.rank == rank_exact(m));
        REQUIRE(c.evidence == RankEvidence::KernelWitness);
        CHECK(c.side == KernelSide::Left);
        CHECK(c.witness.size() == 5);
        CHECK(verify_certificate(m, c));
    }

    SUBCASE("tall deficient") {
        SparseIntMatrix m = planted_product(11, 6, 3, rng);
        RankCertificate c = certified_rank(m, {.seed = 5});
        CHECK(c.rank == rank_exact(m));
        REQUIRE(c.evidence == RankEvidence::KernelWitness);
        CHECK(c.side == KernelSide::Right);
        CHECK(c.witness.size() == 6);
        CHECK(verify_certificate(m, c));
    }

    SUBCASE("zero matrix") {
        SparseIntMatrix m(4, 3, {});
        RankCertificate c = certified_rank(m, {.seed = 6});
        CHECK(c.rank == 0);
        REQUIRE(c.evidence == RankEvidence::KernelWitness);
        CHECK(verify_certificate(m, c));
    }
}

TEST_CASE("certified rank is deterministic for a fixed seed") {
    std::mt19937_64 rng(77);
    SparseIntMatrix m = planted_product(10, 10, 6, rng);
    RankCertificate a = certified_rank(m, {.seed = 123});
    RankCertificate b = certified_rank(m, {.seed = 123});
    CHECK(a.rank == b.rank);
    CHECK(a.evidence == b.evidence);
    CHECK(a.prime == b.prime);
    CHECK(a.witness == b.witness);
    CHECK(a.primes_used == b.primes_used);

    RankCertificate c = certified_rank(m, {.seed = 124});
    CHECK(c.rank == a.rank);  // verdict independent of seed
}

TEST_CASE("certified rank equals exact rank on a random batch") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 18);
        int cols = 1 + static_cast<int>(rng() % 18);
        SparseIntMatrix m = random_matrix(rows, cols, 0.35, 2, rng);
        RankCertificate c =
            certified_rank(m, {.seed = 1000 + static_cast<std::uint64_t>(trial)});
        CHECK(c.rank == rank_exact(m));
        CHECK(verify_certificate(m, c));
    }
}

TEST_CASE("indeterminate when every strategy is disabled") {
    RankPolicy p;
    p.max_retries = 0;
    p.dense_threshold = 1;
    CHECK_THROWS_AS(certified_rank(identity_pattern(3), p), IndeterminateRank);
}
