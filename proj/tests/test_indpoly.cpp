#include <doctest.h>

#include <stdexcept>

#include "indpoly.hpp"

using namespace wlp;

namespace {

Graph petersen() {
    return from_edge_list(10, {{0, 1},
                               {1, 2},
                               {2, 3},
                               {3, 4},
                               {4, 0},
                               {0, 5},
                               {1, 6},
                               {2, 7},
                               {3, 8},
                               {4, 9},
                               {5, 7},
                               {7, 9},
                               {9, 6},
                               {6, 8},
                               {8, 5}});
}

} // namespace

TEST_CASE("independence polynomials of small families") {
    CHECK(independence_polynomial(path(1)) == UPoly({1, 1}));
    CHECK(independence_polynomial(path(2)) == UPoly({1, 2}));
    CHECK(independence_polynomial(path(3)) == UPoly({1, 3, 1}));
    CHECK(independence_polynomial(path(4)) == UPoly({1, 4, 3}));
    CHECK(independence_polynomial(path(5)) == UPoly({1, 5, 6, 1}));

    CHECK(independence_polynomial(cycle(3)) == UPoly({1, 3}));
    CHECK(independence_polynomial(cycle(4)) == UPoly({1, 4, 2}));
    CHECK(independence_polynomial(cycle(5)) == UPoly({1, 5, 5}));
    CHECK(independence_polynomial(cycle(6)) == UPoly({1, 6, 9, 2}));

    CHECK(independence_polynomial(pan(4)) == UPoly({1, 5, 5, 1}));
    CHECK(independence_polynomial(pan(5)) == UPoly({1, 6, 9, 3}));
}

TEST_CASE("sixteen vertex path") {
    CHECK(independence_polynomial(path(16)) ==
          UPoly({1, 16, 105, 364, 715, 792, 462, 120, 9}));
}

TEST_CASE("twenty-one vertex cycle coefficients") {
    UPoly c21 = independence_polynomial(cycle(21));
    CHECK(c21.degree() == 10);
    CHECK(c21.coeff(5) == 5733);
    CHECK(c21.coeff(6) == 7007);
    CHECK(c21.coeff(7) == 5148);
    auto mode = mode_analysis(c21);
    CHECK(mode.unimodal);
    CHECK(*mode.mode == 6);
}

TEST_CASE("petersen graph") {
    UPoly p = independence_polynomial(petersen());
    CHECK(p == UPoly({1, 10, 30, 30, 5}));
    CHECK(p == brute_force_independence_polynomial(petersen()));
}

TEST_CASE("edgeless graph factors into (1+t) powers") {
    Graph e10 = from_edge_list(10, {});
    UPoly expected = UPoly::one();
    for (int i = 0; i < 10; ++i) expected = expected * UPoly({1, 1});
    CHECK(independence_polynomial(e10) == expected);
}

TEST_CASE("disjoint union multiplies polynomials") {
    Graph a = cycle(5);
    Graph b = path(4);
    CHECK(independence_polynomial(disjoint_union(a, b)) ==
          independence_polynomial(a) * independence_polynomial(b));

    Graph nested = disjoint_union(disjoint_union(a, b), cycle(3));
    CHECK(independence_polynomial(nested) ==
          independence_polynomial(a) * independence_polynomial(b) *
              independence_polynomial(cycle(3)));
}

TEST_CASE("engine agrees with exhaustive enumeration") {
    for (int n = 1; n <= 12; ++n) {
        Graph g = path(n);
        CHECK(independence_polynomial(g) ==
              brute_force_independence_polynomial(g));
    }
    for (int m = 3; m <= 12; ++m) {
        Graph g = cycle(m);
        CHECK(independence_polynomial(g) ==
              brute_force_independence_polynomial(g));
    }
    for (int m = 3; m <= 7; ++m)
        for (int n = 0; n <= 7; ++n) {
            Graph g = tadpole(m, n);
            CHECK(independence_polynomial(g) ==
                  brute_force_independence_polynomial(g));
        }
    // An irregular graph: two triangles joined by a path, plus a chord.
    Graph irregular = from_edge_list(
        9, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
            {7, 8}, {8, 6}, {3, 5}});
    CHECK(independence_polynomial(irregular) ==
          brute_force_independence_polynomial(irregular));

    CHECK_THROWS_AS(brute_force_independence_polynomial(path(26)),
                    std::invalid_argument);
}

TEST_CASE("branch choice does not change the result") {
    Graph graphs[] = {tadpole(6, 4), petersen(), disjoint_union(path(5), cycle(7))};
    for (const Graph& g : graphs) {
        UPoly reference = independence_polynomial(g);
        for (uint64_t seed : {1ull, 2ull, 99ull, 123456789ull})
            CHECK(independence_polynomial(g, BranchRule::Seeded, seed) ==
                  reference);
    }
}

TEST_CASE("closed form matches the path mode") {
    for (int n = 1; n <= 60; ++n) {
        ModeReport r = mode_analysis(independence_polynomial(path(n)));
        REQUIRE(r.unimodal);
        CHECK(lambda_closed_form(n) == *r.mode);
    }
}

TEST_CASE("tadpole decomposition identities") {
    auto checks = verify_decompositions(3, 12, 1, 12);
    CHECK(checks.size() == 2 * 10 + 2 * 12);
    for (const auto& c : checks) {
        INFO(c.identity, " at ", c.param);
        CHECK(c.holds);
    }
}

TEST_CASE("mode inequalities across families") {
    auto checks = verify_mode_inequalities(1, 30);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
        INFO(c.statement, " at ", c.param);
        CHECK(c.holds);
    }
}
