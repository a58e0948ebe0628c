#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "charm/catalog.hpp"
#include "charm/connectivity.hpp"
#include "charm/enumerate.hpp"
#include "charm/error.hpp"
#include "charm/families.hpp"
#include "charm/solver.hpp"
#include "charm/verify.hpp"
#include "testutil.hpp"

using namespace charm;

namespace {

bool throws_code(errc code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const error& err) {
        return err.code() == code;
    }
    return false;
}

// two copies of the petersen graph minus a pair of adjacent vertices, the
// four degree-two stubs of each copy joined pairwise: cubic, girth 5,
// cyclically 4-edge-connected on 16 vertices
CubicGraph double_petersen_half() {
    CubicGraph p = petersen();
    std::vector<Edge> es;
    auto lo = [](int v) { return v - 2; };
    auto hi = [](int v) { return v + 6; };
    for (Edge e : p.edges()) {
        if (e.u <= 1 || e.v <= 1) continue;
        es.push_back(Edge(lo(e.u), lo(e.v)));
        es.push_back(Edge(hi(e.u), hi(e.v)));
    }
    for (int s : {2, 4, 5, 6}) es.push_back(Edge(lo(s), hi(s)));
    return CubicGraph::from_edges(16, es);
}

// union-find acyclicity check for an edge set over g's vertices
bool edge_set_acyclic(const CubicGraph& g, const std::vector<Edge>& edges) {
    std::vector<int> parent(g.order());
    for (int v = 0; v < g.order(); ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (Edge e : edges) {
        int a = find(e.u), b = find(e.v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

std::vector<Edge> complement_edges(const CubicGraph& g, const std::set<Edge>& removed) {
    std::vector<Edge> out;
    for (Edge e : g.edges())
        if (!removed.count(e)) out.push_back(e);
    return out;
}

Circuit outer_pentagon() { return Circuit({0, 1, 2, 3, 4}); }
Circuit inner_pentagram() { return Circuit({5, 7, 9, 6, 8}); }

}  // namespace

TEST_CASE("oracle returns the first feasible matching in enumeration order") {
    for (const CubicGraph& g : {k4(), k33()}) {
        for (Edge e : g.edges()) {
            auto collections = enumerate_disjoint_circuit_collections(g);
            for (const CircuitCollection& cc : collections) {
                std::vector<PerfectMatching> good;
                for (const PerfectMatching& m : enumerate_perfect_matchings(g, e))
                    if (matching_hits_all(m, cc)) good.push_back(m);
                auto got = oracle_charm(g, e, cc);
                REQUIRE(got.has_value() == !good.empty());
                if (got) {
                    CHECK(*got == good.front());
                    CHECK(charm_witness_ok(g, e, cc, *got));
                }
            }
        }
    }
}

TEST_CASE("surgery result agrees with the oracle on every instance up to order 8") {
    SolveConfig cfg;
    cfg.brute_force_threshold = 6;  // force the structural rules at order 8
    int instances = 0;
    for (const CubicGraph& g : generate_cubic_catalog(8)) {
        if (cyclic_edge_connectivity(g) < 3 || is_klee(g)) continue;
        for (Edge e : g.edges()) {
            for (const CircuitCollection& cc : enumerate_disjoint_circuit_collections(g)) {
                REQUIRE(oracle_charm(g, e, cc).has_value());
                CharmResult r = charm_matching(g, e, cc, cfg);
                CHECK(charm_witness_ok(g, e, cc, r.matching));
                ++instances;
            }
        }
    }
    CHECK(instances > 500);
}

TEST_CASE("prescriptions on the petersen graph") {
    CubicGraph g = petersen();
    CircuitCollection both({outer_pentagon(), inner_pentagram()});

    CharmResult r = charm_matching(g, Edge(0, 1), both);
    CHECK(charm_witness_ok(g, Edge(0, 1), both, r.matching));
    CHECK(!r.trace.empty());

    // a spoke edge with the same prescription
    r = charm_matching(g, Edge(2, 7), both);
    CHECK(charm_witness_ok(g, Edge(2, 7), both, r.matching));

    // low threshold exercises the structural rules; the result stays verified
    SolveConfig cfg;
    cfg.brute_force_threshold = 6;
    for (Edge e : g.edges()) {
        CharmResult deep = charm_matching(g, e, both, cfg);
        CHECK(charm_witness_ok(g, e, both, deep.matching));
    }
}

TEST_CASE("prescriptions on the cube and on k33") {
    CubicGraph c = cube();
    CircuitCollection face({Circuit({0, 1, 2, 3})});
    for (Edge e : c.edges()) {
        CharmResult r = charm_matching(c, e, face);
        CHECK(charm_witness_ok(c, e, face, r.matching));
    }

    CubicGraph g = k33();
    for (Edge e : g.edges())
        for (const CircuitCollection& cc : enumerate_disjoint_circuit_collections(g)) {
            CharmResult r = charm_matching(g, e, cc);
            CHECK(charm_witness_ok(g, e, cc, r.matching));
        }
}

TEST_CASE("empty collection asks only for a matching through the edge") {
    CubicGraph g = petersen();
    CircuitCollection none;
    for (Edge e : g.edges()) {
        CharmResult r = charm_matching(g, e, none);
        CHECK(r.matching.contains(e));
        CHECK(is_perfect_matching(g, r.matching));
    }
}

TEST_CASE("klee and low-connectivity inputs are rejected") {
    CircuitCollection none;

    CHECK(throws_code(errc::klee_input, [&] { charm_matching(prism(), Edge(0, 1), none); }));
    CHECK(throws_code(errc::klee_input, [&] { charm_matching(k4(), Edge(0, 1), none); }));
    CubicGraph kl8 = make_family(LadderKind::klee_ladder, 8);
    CHECK(throws_code(errc::klee_input, [&] { charm_matching(kl8, kl8.edges().front(), none); }));

    // a bridge: two subdivided k4 blobs joined by one edge
    CubicGraph bridged = CubicGraph::from_edges(
        10, {Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3), Edge(0, 4), Edge(1, 4),
             Edge(5, 7), Edge(5, 8), Edge(6, 7), Edge(6, 8), Edge(7, 8), Edge(5, 9), Edge(6, 9),
             Edge(4, 9)});
    CHECK(throws_code(errc::connectivity_too_low,
                      [&] { charm_matching(bridged, Edge(4, 9), none); }));
    CHECK(throws_code(errc::connectivity_too_low,
                      [&] { charm_matching_any(bridged, none); }));

    CHECK(throws_code(errc::edge_not_in_graph,
                      [&] { charm_matching(petersen(), Edge(0, 7), none); }));
    CircuitCollection overlapping({Circuit({0, 1, 2, 3, 4}), Circuit({0, 5, 8, 6, 1})});
    CHECK(throws_code(errc::circuits_not_disjoint,
                      [&] { charm_matching(petersen(), Edge(2, 3), overlapping); }));
}

TEST_CASE("klee ladder spanning-circuit instance has no witness") {
    for (int n = 6; n <= 14; n += 2) {
        CounterexampleDemo demo = demo_counterexample(n);
        CHECK_FALSE(demo.witness_exists);
        CircuitCollection cc({demo.spanning_circuit});
        CHECK_FALSE(oracle_charm(demo.graph, demo.special_edge, cc).has_value());
        // yet dropping the edge constraint leaves the instance feasible
        PerfectMatching any = charm_matching_any(demo.graph, cc);
        CHECK(is_perfect_matching(demo.graph, any));
        CHECK(matching_hits_all(any, cc));
        CHECK_FALSE(any.contains(demo.special_edge));
    }
}

TEST_CASE("matching with no prescribed edge") {
    // klee input: a colour class answers
    CubicGraph pr = prism();
    CircuitCollection tri({Circuit({0, 1, 2})});
    PerfectMatching m = charm_matching_any(pr, tri);
    CHECK(is_perfect_matching(pr, m));
    CHECK(matching_hits_all(m, tri));

    // non-klee input delegates to the prescribed-edge solver
    CubicGraph g = petersen();
    CircuitCollection both({outer_pentagon(), inner_pentagram()});
    PerfectMatching pm = charm_matching_any(g, both);
    CHECK(is_perfect_matching(g, pm));
    CHECK(matching_hits_all(pm, both));

    PerfectMatching free = charm_matching_any(g, CircuitCollection{});
    CHECK(is_perfect_matching(g, free));
}

TEST_CASE("acyclic complement of a one-plus factor") {
    CubicGraph g = petersen();

    // the whole edge set as factor: nothing remains, any matching through e works
    OnePlusFactor all(g.edges());
    PerfectMatching m = acyclic_complement(g, all, Edge(0, 1));
    CHECK(m.contains(Edge(0, 1)));
    CHECK(is_perfect_matching(g, m));

    // a perfect matching as factor: its complement is two disjoint circuits
    for (const PerfectMatching& f : enumerate_perfect_matchings(g, std::nullopt)) {
        OnePlusFactor factor(f.edges);
        for (Edge e : g.edges()) {
            PerfectMatching w = acyclic_complement(g, factor, e);
            CHECK(w.contains(e));
            std::set<Edge> removed(f.edges.begin(), f.edges.end());
            removed.insert(w.edges.begin(), w.edges.end());
            CHECK(edge_set_acyclic(g, complement_edges(g, removed)));
        }
    }

    CHECK(throws_code(errc::klee_input, [&] {
        CubicGraph pr = prism();
        acyclic_complement(pr, OnePlusFactor(pr.edges()), Edge(0, 1));
    }));
}

TEST_CASE("second matching leaves the rest acyclic") {
    for (const CubicGraph& g : {k4(), petersen(), prism(), cube()}) {
        for (const PerfectMatching& m1 : enumerate_perfect_matchings(g, std::nullopt)) {
            PerfectMatching m2 = second_matching(g, m1);
            CHECK(is_perfect_matching(g, m2));
            std::set<Edge> removed(m1.edges.begin(), m1.edges.end());
            removed.insert(m2.edges.begin(), m2.edges.end());
            CHECK(edge_set_acyclic(g, complement_edges(g, removed)));
        }
    }
    CHECK(throws_code(errc::invalid_matching, [&] {
        second_matching(k4(), PerfectMatching({Edge(0, 1)}));
    }));
}

TEST_CASE("four-edge cut rule handles a cyclically 4-connected instance") {
    CubicGraph h = double_petersen_half();
    REQUIRE(h.order() == 16);
    CHECK(girth(h) == 5);
    CHECK(cyclic_edge_connectivity(h) == 4);
    CHECK_FALSE(find_cyclic_edge_cut(h, 3).has_value());

    auto ca = shortest_circuit_through(h, Edge(5, 7));
    auto cb = shortest_circuit_through(h, Edge(13, 15));
    REQUIRE(ca);
    REQUIRE(cb);
    CircuitCollection cc({*ca, *cb});

    SolveConfig cfg;
    cfg.brute_force_threshold = 6;
    CharmResult r = charm_matching(h, Edge(0, 1), cc, cfg);
    CHECK(charm_witness_ok(h, Edge(0, 1), cc, r.matching));
    CHECK(!r.used_oracle_fallback);
    bool used_4cut = false;
    for (const ReductionStep& step : r.trace)
        if (step.rule == "4cut") used_4cut = true;
    CHECK(used_4cut);
}

TEST_CASE("solves are deterministic") {
    CubicGraph g = petersen();
    CircuitCollection both({outer_pentagon(), inner_pentagram()});
    SolveConfig cfg;
    cfg.brute_force_threshold = 6;
    CharmResult a = charm_matching(g, Edge(0, 1), both, cfg);
    CharmResult b = charm_matching(g, Edge(0, 1), both, cfg);
    CHECK(a.matching == b.matching);
    CHECK(a.trace == b.trace);
    CHECK(a.used_oracle_fallback == b.used_oracle_fallback);
}

TEST_CASE("witness predicate rejects bad candidates") {
    CubicGraph g = petersen();
    CircuitCollection cc({outer_pentagon()});
    Edge e(0, 1);
    PerfectMatching good = charm_matching(g, e, cc).matching;
    CHECK(charm_witness_ok(g, e, cc, good));

    PerfectMatching spokes({Edge(0, 5), Edge(1, 6), Edge(2, 7), Edge(3, 8), Edge(4, 9)});
    REQUIRE(is_perfect_matching(g, spokes));

    // wrong edge
    CHECK_FALSE(charm_witness_ok(g, Edge(2, 3), CircuitCollection{}, spokes));
    // not perfect
    CHECK_FALSE(charm_witness_ok(g, e, cc, PerfectMatching({e})));
    // perfect and through the edge, but missing the circuit
    CHECK_FALSE(charm_witness_ok(g, Edge(0, 5), CircuitCollection({inner_pentagram()}), spokes));
}
