#include <doctest.h>

#include <stdexcept>

#include "graph.hpp"
#include "indpoly.hpp"
#include "wlp.hpp"

using namespace wlp;

TEST_CASE("single vertex has the property trivially") {
    WlpReport r = wlp_check(path(1));
    CHECK(r.graph_name == "P_1");
    CHECK(r.n == 1);
    CHECK(r.has_wlp);
    CHECK(r.hilbert.socle_degree == 1);
    REQUIRE(r.degrees.size() == 1);
    CHECK(r.degrees[0].maximal);
    CHECK(r.degrees[0].rank == 1);
    CHECK_FALSE(r.fail_degree().has_value());
}

TEST_CASE("small graphs with the property") {
    for (const Graph& g : {path(4), path(7), cycle(5), cycle(11),
                           tadpole(4, 2), tadpole(5, 3)}) {
        CAPTURE(g.name());
        WlpReport r = wlp_check(g);
        CHECK(r.has_wlp);
        CHECK(r.degrees.size() == static_cast<size_t>(r.hilbert.socle_degree));
        for (const DegreeVerdict& d : r.degrees) {
            CHECK(d.maximal);
            CHECK_FALSE(d.failure_kind.has_value());
            CHECK(d.rank == std::min(d.h_j, d.h_j1));
        }
    }
}

TEST_CASE("small graphs without the property") {
    struct Expected {
        Graph g;
        int degree;
        FailureKind kind;
    };
    const Expected cases[] = {
        {path(8), 2, FailureKind::Surjectivity},
        {path(12), 3, FailureKind::Injectivity},
        {cycle(12), 3, FailureKind::Surjectivity},
        {cycle(15), 4, FailureKind::Surjectivity},
        {tadpole(4, 8), 3, FailureKind::Surjectivity},
        {tadpole(6, 2), 2, FailureKind::Surjectivity},
        {tadpole(3, 2), 1, FailureKind::Both},
    };
    for (const Expected& e : cases) {
        CAPTURE(e.g.name());
        WlpReport r = wlp_check(e.g);
        CHECK_FALSE(r.has_wlp);
        REQUIRE(r.fail_degree().has_value());
        CHECK(*r.fail_degree() == e.degree);
        CHECK(*r.fail_kind() == e.kind);
    }
}

TEST_CASE("failure kind matches the shape of the failing map") {
    WlpReport r = wlp_check(cycle(12));
    for (const DegreeVerdict& d : r.degrees) {
        if (d.maximal) continue;
        REQUIRE(d.failure_kind.has_value());
        if (d.h_j < d.h_j1) CHECK(*d.failure_kind == FailureKind::Injectivity);
        if (d.h_j > d.h_j1) CHECK(*d.failure_kind == FailureKind::Surjectivity);
        if (d.h_j == d.h_j1) CHECK(*d.failure_kind == FailureKind::Both);
        CHECK(d.rank < std::min(d.h_j, d.h_j1) + (d.maximal ? 0 : 1));
        CHECK(verify_certificate(level_map(cycle(12), d.j).matrix,
                                 d.certificate));
    }
}

TEST_CASE("hilbert function in the report matches the polynomial") {
    Graph g = tadpole(5, 3);
    WlpReport r = wlp_check(g);
    UPoly p = independence_polynomial(g);
    REQUIRE(r.hilbert.h.size() == p.coeffs().size());
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        CHECK(r.hilbert.h[i] == p.coeffs()[i]);
    REQUIRE(r.mode.unimodal);
    CHECK(*r.mode.mode == 2);
}

TEST_CASE("fail fast stops at the first failing degree") {
    WlpReport full = wlp_check(path(12));
    WlpReport fast = wlp_check(path(12), {.fail_fast = true});
    REQUIRE(fast.fail_degree().has_value());
    CHECK(*fast.fail_degree() == *full.fail_degree());
    CHECK(fast.degrees.size() == static_cast<size_t>(*fast.fail_degree()) + 1);
    CHECK(full.degrees.size() == static_cast<size_t>(full.hilbert.socle_degree));
}

TEST_CASE("verdicts are invariant under relabeling") {
    // C_12 with vertices rotated and edges listed in scrambled order.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 12; ++i) edges.push_back({(i * 5) % 12, (i * 5 + 5) % 12});
    Graph scrambled = from_edge_list(12, edges);
    WlpReport a = wlp_check(cycle(12));
    WlpReport b = wlp_check(scrambled, {.policy = {.seed = 9911}});
    CHECK(a.has_wlp == b.has_wlp);
    REQUIRE(a.fail_degree().has_value());
    REQUIRE(b.fail_degree().has_value());
    CHECK(*a.fail_degree() == *b.fail_degree());
    CHECK(*a.fail_kind() == *b.fail_kind());
    for (size_t i = 0; i < a.degrees.size(); ++i) {
        CHECK(a.degrees[i].rank == b.degrees[i].rank);
        CHECK(a.degrees[i].maximal == b.degrees[i].maximal);
    }
}

TEST_CASE("reports are reproducible for a fixed seed") {
    WlpOptions opts;
    opts.policy.seed = 424242;
    WlpReport a = wlp_check(cycle(9), opts);
    WlpReport b = wlp_check(cycle(9), opts);
    REQUIRE(a.degrees.size() == b.degrees.size());
    for (size_t i = 0; i < a.degrees.size(); ++i) {
        CHECK(a.degrees[i].certificate.prime == b.degrees[i].certificate.prime);
        CHECK(a.degrees[i].certificate.primes_used ==
              b.degrees[i].certificate.primes_used);
    }
}

TEST_CASE("empty graphs are rejected") {
    CHECK_THROWS_AS(wlp_check(Graph(0, {}, "empty")), std::invalid_argument);
}

TEST_CASE("one-sided probes at and past the socle") {
    // P_1: h = (1, 1), socle degree 1.
    CHECK_FALSE(map_fails(path(1), 0, FailureKind::Injectivity));
    CHECK_FALSE(map_fails(path(1), 0, FailureKind::Surjectivity));
    CHECK(map_fails(path(1), 1, FailureKind::Injectivity));
    CHECK_FALSE(map_fails(path(1), 1, FailureKind::Surjectivity));
    // Past the socle both spaces are zero: the zero map is injective and onto.
    CHECK_FALSE(map_fails(path(1), 5, FailureKind::Injectivity));
    CHECK_FALSE(map_fails(path(1), 5, FailureKind::Surjectivity));

    // P_12 fails injectivity at 3; C_12 fails surjectivity at 3.
    CHECK(map_fails(path(12), 3, FailureKind::Injectivity));
    CHECK_FALSE(map_fails(path(12), 2, FailureKind::Injectivity));
    CHECK(map_fails(cycle(12), 3, FailureKind::Surjectivity));
    CHECK_FALSE(map_fails(cycle(11), 3, FailureKind::Surjectivity));

    CHECK_THROWS_AS(map_fails(path(3), 0, FailureKind::Both),
                    std::invalid_argument);
    CHECK_THROWS_AS(map_fails(path(3), -1, FailureKind::Injectivity),
                    std::invalid_argument);
}

TEST_CASE("failures propagate to disjoint unions") {
    // Surjectivity: T_{3,2} fails at 1 on both factors, so the union must
    // fail at 1 + 1 + 1 = 3.
    CHECK(tensor_failure_check(tadpole(3, 2), 1, tadpole(3, 2), 1,
                               FailureKind::Surjectivity));
    // P_4 has maximal maps everywhere, so this premise is rejected.
    CHECK_THROWS_AS(tensor_failure_check(path(4), 1, tadpole(3, 2), 1,
                                         FailureKind::Surjectivity),
                    std::invalid_argument);

    // Injectivity: P_1 fails at 1, P_12 fails at 3 -> union fails at 4.
    CHECK(tensor_failure_check(path(1), 1, path(12), 3,
                               FailureKind::Injectivity));
    // Premise violation on the first factor.
    CHECK_THROWS_AS(
        tensor_failure_check(path(1), 0, path(12), 3, FailureKind::Injectivity),
        std::invalid_argument);
}
