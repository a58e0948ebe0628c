#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charm/connectivity.hpp"
#include "charm/families.hpp"
#include "testutil.hpp"

using namespace charm;

namespace {

// two K4-with-subdivided-edge blobs joined by a bridge: the smallest kind of
// bridged cubic graph
CubicGraph bridged() {
    std::vector<Edge> es;
    for (int base : {0, 5}) {
        for (Edge e : {Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3),
                       Edge(0, 4), Edge(1, 4)})
            es.push_back(Edge(e.u + base, e.v + base));
    }
    es.push_back(Edge(4, 9));
    return CubicGraph::from_edges(10, es);
}

}  // namespace

TEST_CASE("cyclic edge connectivity of the named graphs") {
    CHECK(cyclic_edge_connectivity(k4()) == 3);
    CHECK(cyclic_edge_connectivity(k33()) == 4);
    CHECK(cyclic_edge_connectivity(petersen()) == 5);
    CHECK(cyclic_edge_connectivity(prism()) == 3);
    CHECK(cyclic_edge_connectivity(cube()) == 4);
    CHECK(cyclic_edge_connectivity(bridged()) == 1);
}

TEST_CASE("smallest cyclic cut search") {
    auto cut = find_cyclic_edge_cut(prism(), 3);
    REQUIRE(cut.has_value());
    CHECK(cut->cyclic);
    CHECK(cut->crossing == std::vector<Edge>{Edge(0, 3), Edge(1, 4), Edge(2, 5)});

    CHECK(!find_cyclic_edge_cut(petersen(), 4).has_value());
    CHECK(!find_cyclic_edge_cut(k4(), 6).has_value());
    CHECK(!find_cyclic_edge_cut(k33(), 3).has_value());

    // search is smallest-first: a graph with a bridge reports the bridge
    auto b = find_cyclic_edge_cut(bridged(), 3);
    REQUIRE(b.has_value());
    CHECK(b->crossing == std::vector<Edge>{Edge(4, 9)});
}

TEST_CASE("two disjoint circuits") {
    CHECK(!has_two_disjoint_circuits(k4()));
    CHECK(!has_two_disjoint_circuits(k33()));
    CHECK(has_two_disjoint_circuits(prism()));
    CHECK(has_two_disjoint_circuits(petersen()));
}

TEST_CASE("bridges and girth") {
    CHECK(is_bridgeless(k4()));
    CHECK(is_bridgeless(petersen()));
    CHECK(!is_bridgeless(bridged()));
    CHECK(girth(k4()) == 3);
    CHECK(girth(k33()) == 4);
    CHECK(girth(prism()) == 3);
    CHECK(girth(cube()) == 4);
    CHECK(girth(petersen()) == 5);
}

TEST_CASE("shortest circuit through an edge") {
    auto c = shortest_circuit_through(prism(), Edge(0, 1));
    REQUIRE(c.has_value());
    CHECK(c->length() == 3);
    CHECK(c->has_edge(Edge(0, 1)));

    auto rung = shortest_circuit_through(prism(), Edge(0, 3));
    REQUIRE(rung.has_value());
    CHECK(rung->length() == 4);

    CHECK(!shortest_circuit_through(bridged(), Edge(4, 9)).has_value());

    for (Edge e : petersen().edges()) {
        auto five = shortest_circuit_through(petersen(), e);
        REQUIRE(five.has_value());
        CHECK(five->length() == 5);
    }
}

TEST_CASE("edge distance in the line graph") {
    CubicGraph g = prism();
    CHECK(edge_distance(g, Edge(0, 1), Edge(0, 1)) == 0);
    CHECK(edge_distance(g, Edge(0, 1), Edge(1, 2)) == 1);
    CHECK(edge_distance(g, Edge(0, 1), Edge(3, 4)) == 2);
    CHECK(edge_distance(petersen(), Edge(0, 1), Edge(2, 3)) == 2);
    CHECK(edge_distance(petersen(), Edge(0, 1), Edge(7, 9)) == 3);
}

TEST_CASE("explicit cut construction") {
    EdgeCut cut = edge_cut_between(prism(), {0, 1, 2});
    CHECK(cut.cyclic);
    CHECK(cut.crossing == std::vector<Edge>{Edge(0, 3), Edge(1, 4), Edge(2, 5)});
    CHECK(cut.side_a == std::vector<int>{0, 1, 2});
    CHECK(cut.side_b == std::vector<int>{3, 4, 5});

    EdgeCut pair = edge_cut_between(prism(), {3, 4});
    CHECK(!pair.cyclic);
    CHECK(pair.crossing.size() == 4);
    // vertex 0 always sits in side_a
    CHECK(pair.side_a.front() == 0);

    CHECK_THROWS_AS(edge_cut_between(prism(), {}), error);
    CHECK_THROWS_AS(edge_cut_between(prism(), {0, 1, 2, 3, 4, 5}), error);
    CHECK_THROWS_AS(edge_cut_between(prism(), {0, 0}), error);
}
