#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "charm/canonical.hpp"
#include "charm/connectivity.hpp"
#include "charm/enumerate.hpp"
#include "charm/families.hpp"
#include "charm/graph6.hpp"
#include "testutil.hpp"

using namespace charm;

TEST_CASE("vertex expansion") {
    CubicGraph p = expand_vertex(k4(), 0);
    CHECK(p.order() == 6);
    CHECK(is_isomorphic(p, prism()));
    for (int v = 0; v < 4; ++v) CHECK(is_isomorphic(expand_vertex(k4(), v), prism()));

    // expanding a prism vertex yields the 8-vertex Klee ladder for some choice
    bool ladder_reached = false;
    for (int v = 0; v < 6; ++v) {
        CubicGraph h = expand_vertex(prism(), v);
        CHECK(h.order() == 8);
        CHECK(is_klee(h));
        if (classify_ladder_family(h).kind == LadderKind::klee_ladder) ladder_reached = true;
    }
    CHECK(ladder_reached);
    CHECK_THROWS_AS(expand_vertex(k4(), 4), error);
}

TEST_CASE("triangle contraction inverts expansion") {
    TriangleContraction tc = contract_triangle(prism(), Circuit({0, 1, 2}));
    CHECK(tc.graph == k4());
    CHECK(tc.new_vertex == 3);
    CHECK(tc.to_old[tc.new_vertex] == -1);
    CHECK(tc.to_new[0] == tc.new_vertex);

    CubicGraph kl8 = make_klee_ladder(8);
    for (const Circuit& t : triangles_of(kl8)) {
        TriangleContraction down = contract_triangle(kl8, t);
        CHECK(is_isomorphic(down.graph, prism()));
    }

    std::mt19937 rng(3);
    for (int round = 0; round < 20; ++round) {
        CubicGraph g = random_klee_graph(6 + 2 * (round % 5), rng);
        int v = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
        CubicGraph up = expand_vertex(g, v);
        // the fresh triangle is v with the two new ids
        TriangleContraction down =
            contract_triangle(up, Circuit({v, g.order(), g.order() + 1}));
        CHECK(is_isomorphic(down.graph, g));
    }

    CHECK_THROWS_AS(contract_triangle(prism(), Circuit({0, 1, 4})), error);
    // contracting with colliding outside neighbors must refuse
    CHECK_THROWS_AS(contract_triangle(k4(), Circuit({0, 1, 2})), error);
}

TEST_CASE("klee recognition and certificates") {
    CHECK(is_klee(k4()));
    CHECK(is_klee(prism()));
    CHECK(!is_klee(petersen()));
    CHECK(!is_klee(k33()));
    CHECK(!is_klee(cube()));

    CHECK(klee_certificate(k4()).expansion_history.empty());
    CHECK(klee_certificate(prism()).expansion_history.size() == 1);
    CHECK_THROWS_AS(klee_certificate(petersen()), error);

    std::mt19937 rng(11);
    for (int round = 0; round < 10; ++round) {
        CubicGraph g = random_klee_graph(8 + 2 * (round % 4), rng);
        KleeCertificate cert = klee_certificate(g);
        CHECK(is_isomorphic(replay_certificate(cert), g));
    }
}

TEST_CASE("the colour classes of a klee graph") {
    auto k4_classes = klee_coloring(k4());
    std::set<Edge> covered;
    for (const auto& cls : k4_classes) {
        CHECK(is_perfect_matching(k4(), cls));
        covered.insert(cls.edges.begin(), cls.edges.end());
    }
    CHECK(covered.size() == 6);

    // prism: each class holds exactly one of the three rungs
    auto classes = klee_coloring(prism());
    for (const auto& cls : classes) {
        CHECK(is_perfect_matching(prism(), cls));
        int rungs = 0;
        for (Edge e : {Edge(0, 3), Edge(1, 4), Edge(2, 5)})
            if (cls.contains(e)) ++rungs;
        CHECK(rungs == 1);
    }

    CHECK_THROWS_AS(klee_coloring(k33()), error);

    // uniqueness: six labeled colourings, i.e. one partition
    std::mt19937 rng(5);
    for (int n : {8, 10, 12}) {
        CubicGraph g = random_klee_graph(n, rng);
        CHECK(count_edge_colourings(g) == 6);
    }
}

TEST_CASE("random klee graphs are reproducible") {
    std::mt19937 a(42), b(42);
    CHECK(random_klee_graph(12, a) == random_klee_graph(12, b));
    std::mt19937 c(43);
    CubicGraph g = random_klee_graph(14, c);
    CHECK(g.order() == 14);
    CHECK(is_klee(g));
}

TEST_CASE("family constructors match the named graphs") {
    CHECK(is_isomorphic(make_klee_ladder(6), prism()));
    CHECK(is_isomorphic(make_klee_ladder(4), k4()));
    CHECK(is_isomorphic(make_ladder(8), cube()));
    CHECK(is_isomorphic(make_family(LadderKind::klee_ladder, 6), prism()));

    // the moebius ladder on 8 vertices and the quasi ladder on 8 vertices
    // coincide; from 10 on the three stripped families are pairwise distinct
    CHECK(is_isomorphic(make_moebius_ladder(8), make_quasi_ladder(8)));
    for (int n = 10; n <= 16; n += 2) {
        CHECK(!is_isomorphic(make_ladder(n), make_moebius_ladder(n)));
        CHECK(!is_isomorphic(make_ladder(n), make_quasi_ladder(n)));
        CHECK(!is_isomorphic(make_moebius_ladder(n), make_quasi_ladder(n)));
    }

    CHECK_THROWS_AS(make_klee_ladder(5), error);
    CHECK_THROWS_AS(make_ladder(6), error);
    CHECK_THROWS_AS(make_family(LadderKind::none, 8), error);
}

TEST_CASE("family classification") {
    CHECK(classify_ladder_family(cube()).kind == LadderKind::ladder);
    CHECK(classify_ladder_family(cube()).k == 4);
    CHECK(classify_ladder_family(make_klee_ladder(12)).kind == LadderKind::klee_ladder);
    CHECK(classify_ladder_family(make_klee_ladder(12)).k == 6);
    CHECK(classify_ladder_family(petersen()).kind == LadderKind::none);
    CHECK(classify_ladder_family(k33()).kind == LadderKind::none);

    for (int n = 10; n <= 16; n += 2) {
        CHECK(classify_ladder_family(make_ladder(n)).kind == LadderKind::ladder);
        CHECK(classify_ladder_family(make_moebius_ladder(n)).kind ==
              LadderKind::moebius_ladder);
        CHECK(classify_ladder_family(make_quasi_ladder(n)).kind == LadderKind::quasi_ladder);
    }
    // the 8-vertex coincidence resolves to the kind checked first
    CHECK(classify_ladder_family(make_quasi_ladder(8)).kind == LadderKind::moebius_ladder);

    // classification is label-independent
    std::mt19937 rng(9);
    std::vector<int> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(classify_ladder_family(relabeled(make_moebius_ladder(12), perm)).kind ==
          LadderKind::moebius_ladder);
}

TEST_CASE("the special edge of a klee ladder") {
    for (int n : {6, 8, 10, 12}) {
        CubicGraph g = make_klee_ladder(n);
        Edge e = klee_ladder_special_edge(g);
        auto through = enumerate_perfect_matchings(g, e);
        REQUIRE(through.size() == 1);
        CircuitCollection rest =
            circuits_from_one_plus_factor(g, OnePlusFactor(through.front().edges));
        REQUIRE(rest.count() == 1);
        CHECK(rest.circuits.front().length() == n);
    }
    CHECK_THROWS_AS(klee_ladder_special_edge(cube()), error);
}
