// acceptance: one pass/fail line per criterion, exit 0 only if all pass
#include <algorithm>
#include <array>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "charm/canonical.hpp"
#include "charm/catalog.hpp"
#include "charm/connectivity.hpp"
#include "charm/enumerate.hpp"
#include "charm/error.hpp"
#include "charm/families.hpp"
#include "charm/graph6.hpp"
#include "charm/reductions.hpp"
#include "charm/solver.hpp"
#include "charm/verify.hpp"
#include "testutil.hpp"

using namespace charm;

namespace {

int failures = 0;

void criterion(int idx, const std::string& what, const std::function<bool(std::string&)>& fn) {
    bool ok = false;
    std::string detail;
    try {
        ok = fn(detail);
    } catch (const std::exception& err) {
        detail = err.what();
        ok = false;
    }
    std::printf("criterion %d: %s  %s%s%s\n", idx, ok ? "pass" : "FAIL", what.c_str(),
                detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool pairwise_disjoint(const std::vector<Circuit>& ts) {
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            if (ts[i].vertex_mask() & ts[j].vertex_mask()) return false;
    return true;
}

// edges of the triangle that lie on some 4-circuit of g
int triangle_edges_on_4circuits(const CubicGraph& g, const Circuit& t) {
    std::set<Edge> on_four;
    for (const Circuit& c : four_circuits_of(g)) {
        std::vector<Edge> ce = c.edges();
        on_four.insert(ce.begin(), ce.end());
    }
    int count = 0;
    for (Edge e : t.edges())
        if (on_four.count(e)) ++count;
    return count;
}

bool inside(const Circuit& c, const std::vector<int>& to_new) {
    for (int v : c.vertices)
        if (to_new[v] < 0) return false;
    return true;
}

Circuit mapped(const Circuit& c, const std::vector<int>& to_new) {
    std::vector<int> vs;
    for (int v : c.vertices) vs.push_back(to_new[v]);
    return Circuit(vs);
}

bool hamiltonian_complement(const CubicGraph& g, const PerfectMatching& m) {
    CircuitCollection rest = circuits_from_one_plus_factor(g, OnePlusFactor(m.edges));
    return rest.count() == 1 && rest.circuits.front().length() == g.order();
}

}  // namespace

int main() {
    const uint64_t seed = 20260815;
    std::vector<CubicGraph> cat12 = generate_cubic_catalog(12);

    criterion(1, "witness theorem, all instances to order 12", [&](std::string& detail) {
        SolveConfig cfg;
        cfg.brute_force_threshold = 6;  // push every instance of order >= 8 through the
                                        // structural rules instead of the plain oracle
        VerificationReport r = verify_theorem(cat12, 12, true, seed, 0, cfg);
        detail = "(" + std::to_string(r.graphs.size()) + " graphs, " +
                 std::to_string(r.instances) + " instances, " +
                 std::to_string(r.counted(GraphStatus::verified)) + " verified)";
        if (!r.ok()) {
            for (const GraphReport& gr : r.graphs)
                if (gr.status == GraphStatus::failed)
                    detail += " first failure " + gr.graph6 + " " + gr.failure;
        }
        return r.ok() && r.graphs.size() == 112 && r.instances > 0;
    });

    criterion(2, "klee ladder instance with no witness, orders 6 to 20", [&](std::string& detail) {
        int shown = 0;
        for (int n = 6; n <= 20; n += 2) {
            CounterexampleDemo d = demo_counterexample(n);
            auto through = enumerate_perfect_matchings(d.graph, d.special_edge);
            if (through.size() != 1 || !(through.front() == d.matching)) return false;
            if (d.spanning_circuit.length() != n) return false;
            if (d.witness_exists) return false;
            if (oracle_charm(d.graph, d.special_edge,
                             CircuitCollection({d.spanning_circuit}))) return false;
            ++shown;
        }
        detail = "(" + std::to_string(shown) + " orders)";
        return shown == 8;
    });

    std::mt19937 rng(seed);

    criterion(3, "unique colouring of generated klee graphs", [&](std::string& detail) {
        int samples = 0;
        for (int i = 0; i < 204; ++i) {
            int n = 6 + 2 * (i % 6);
            CubicGraph g = random_klee_graph(n, rng);
            if (count_edge_colourings(g) != 6) {
                detail = "colouring count off at " + write_graph6(g);
                return false;
            }
            ++samples;
        }
        detail = "(" + std::to_string(samples) + " graphs, orders 6 to 16, 6 labeled colourings each)";
        return samples >= 200;
    });

    criterion(4, "triangle structure of generated klee graphs", [&](std::string& detail) {
        std::vector<CubicGraph> samples;
        for (int n = 6; n <= 16; n += 2) samples.push_back(make_klee_ladder(n));
        for (int i = 0; i < 200; ++i) samples.push_back(random_klee_graph(6 + 2 * (i % 6), rng));
        int two_triangle = 0, certified = 0;
        for (const CubicGraph& g : samples) {
            std::vector<Circuit> ts = triangles_of(g);
            if (ts.size() < 2 || !pairwise_disjoint(ts)) {
                detail = "triangle count or overlap off at " + write_graph6(g);
                return false;
            }
            if (g.order() < 8 || ts.size() != 2) continue;
            ++two_triangle;
            for (const Circuit& t : ts)
                if (triangle_edges_on_4circuits(g, t) != 1) {
                    detail = "4-circuit edge count off at " + write_graph6(g);
                    return false;
                }
            bool joined = false;
            for (int u : ts[0].vertices)
                for (int v : ts[1].vertices)
                    if (g.has_edge(u, v)) joined = true;
            if (joined) {
                if (!is_isomorphic(g, make_klee_ladder(g.order()))) {
                    detail = "joined two-triangle graph is not the ladder: " + write_graph6(g);
                    return false;
                }
                ++certified;
            }
        }
        detail = "(" + std::to_string(samples.size()) + " graphs, " +
                 std::to_string(two_triangle) + " with two triangles, " +
                 std::to_string(certified) + " ladder certifications)";
        return two_triangle >= 5 && certified >= 5;
    });

    criterion(5, "ladder matchings: hamiltonian complement plus a second matching",
              [&](std::string& detail) {
        int edges_checked = 0;
        for (LadderKind kind : {LadderKind::ladder, LadderKind::moebius_ladder,
                                LadderKind::quasi_ladder}) {
            for (int n = 8; n <= 16; n += 2) {
                CubicGraph g = make_family(kind, n);
                for (Edge e : g.edges()) {
                    auto through = enumerate_perfect_matchings(g, e);
                    bool spanning = std::any_of(through.begin(), through.end(),
                        [&](const PerfectMatching& m) { return hamiltonian_complement(g, m); });
                    if (!spanning || through.size() < 2) {
                        detail = std::string(ladder_kind_name(kind)) + " order " +
                                 std::to_string(n) + " edge " + to_string(e);
                        return false;
                    }
                    ++edges_checked;
                }
            }
        }
        detail = "(3 families, orders 8 to 16, " + std::to_string(edges_checked) + " edges)";
        return edges_checked > 0;
    });

    criterion(6, "cyclic edge-connectivity of the named graphs", [&](std::string& detail) {
        int k4v = cyclic_edge_connectivity(k4());
        int k33v = cyclic_edge_connectivity(k33());
        int petv = cyclic_edge_connectivity(petersen());
        int priv_ = cyclic_edge_connectivity(prism());
        detail = "(k4 " + std::to_string(k4v) + ", k33 " + std::to_string(k33v) + ", petersen " +
                 std::to_string(petv) + ", prism " + std::to_string(priv_) + ")";
        return k4v == 3 && k33v == 4 && petv == 5 && priv_ == 3;
    });

    criterion(7, "randomized reduction soundness", [&](std::string& detail) {
        long lifts = 0, extensions = 0, smoothings = 0;

        for (const CubicGraph& g : cat12) {
            auto cut = find_cyclic_edge_cut(g, 3);
            if (!cut || cut->crossing.size() != 3) continue;
            ThreeCutSplit sp = split_on_3cut(g, *cut);
            auto circuits = enumerate_circuits(g);
            for (int round = 0; round < 25; ++round) {
                int i = std::uniform_int_distribution<int>(0, 2)(rng);
                auto mps = enumerate_perfect_matchings(sp.g_prime, sp.e_prime[i]);
                auto mds = enumerate_perfect_matchings(sp.g_dprime, sp.e_dprime[i]);
                if (mps.empty() || mds.empty()) continue;
                const auto& mp = mps[std::uniform_int_distribution<size_t>(0, mps.size() - 1)(rng)];
                const auto& md = mds[std::uniform_int_distribution<size_t>(0, mds.size() - 1)(rng)];
                PerfectMatching m = lift_matching_3cut(sp, mp, md, i);
                if (!is_perfect_matching(g, m) || !m.contains(sp.cut[i])) return false;
                for (const Circuit& c : circuits) {
                    if (inside(c, sp.old_to_prime)) {
                        if (matching_hits(m, c) != matching_hits(mp, mapped(c, sp.old_to_prime)))
                            return false;
                    } else if (inside(c, sp.old_to_dprime)) {
                        if (matching_hits(m, c) != matching_hits(md, mapped(c, sp.old_to_dprime)))
                            return false;
                    }
                }
                ++lifts;
            }
        }

        for (const CubicGraph& g : cat12) {
            std::vector<Edge> es = g.edges();
            for (int round = 0; round < 6; ++round) {
                Edge f = es[std::uniform_int_distribution<size_t>(0, es.size() - 1)(rng)];
                int u = rng() % 2 ? f.u : f.v;
                int v = f.other(u);
                std::array<int, 2> us{}, vs{};
                int nu = 0, nv = 0;
                for (int w : g.neighbors(u))
                    if (w != v) us[nu++] = w;
                for (int w : g.neighbors(v))
                    if (w != u) vs[nv++] = w;
                EdgeReduction red;
                try {
                    red = reduce_edge(g, f, u, us[rng() % 2], vs[rng() % 2]);
                } catch (const error&) {
                    continue;  // the pairing would create a parallel edge
                }
                for (const auto& mp : enumerate_perfect_matchings(red.graph)) {
                    if (mp.contains(red.added_ab)) continue;
                    PerfectMatching m = extend_matching_edge_reduction(red, mp);
                    if (!is_perfect_matching(g, m)) return false;
                    if (mp.contains(red.added_gd)) {
                        if (m.contains(f)) return false;
                    } else if (!m.contains(f)) {
                        return false;
                    }
                    ++extensions;
                }
            }
        }

        for (const CubicGraph& g : cat12) {
            std::vector<Circuit> fives;
            for (const Circuit& c : enumerate_circuits(g))
                if (c.length() == 5) fives.push_back(c);
            if (fives.empty()) continue;
            for (int round = 0; round < 14; ++round) {
                const Circuit& c = fives[std::uniform_int_distribution<size_t>(
                    0, fives.size() - 1)(rng)];
                std::array<int, 5> t{};
                std::copy(c.vertices.begin(), c.vertices.end(), t.begin());
                std::rotate(t.begin(), t.begin() + rng() % 5, t.end());
                FiveCircuitSmoothing s;
                try {
                    s = smooth_5circuit(g, t);
                } catch (const error&) {
                    continue;  // outside neighbors collide
                }
                for (const auto& mp : enumerate_perfect_matchings(s.graph)) {
                    PerfectMatching m;
                    try {
                        m = extend_matching_smoothing(s, mp);
                    } catch (const error& err) {
                        if (err.code() != errc::invalid_matching) return false;
                        continue;
                    }
                    if (!is_perfect_matching(g, m)) return false;
                    bool has_p = mp.contains(s.p), has_q = mp.contains(s.q);
                    if (!has_p && !has_q) {
                        if (!m.contains(Edge(s.t[2], s.t[3]))) return false;
                    } else if (has_q) {
                        if (!m.contains(Edge(s.t[0], s.t[4])) ||
                            !m.contains(Edge(s.t[1], s.t[2])) ||
                            !m.contains(Edge(s.t[3], s.t_out[3]))) return false;
                    } else {
                        if (!m.contains(Edge(s.t[0], s.t[1])) ||
                            !m.contains(Edge(s.t[3], s.t[4])) ||
                            !m.contains(Edge(s.t[2], s.t_out[2]))) return false;
                    }
                    ++smoothings;
                }
            }
        }

        detail = "(" + std::to_string(lifts) + " cut lifts, " + std::to_string(extensions) +
                 " edge extensions, " + std::to_string(smoothings) + " smoothing extensions)";
        return lifts >= 1000 && extensions >= 1000 && smoothings >= 1000;
    });

    criterion(8, "two matchings with small acyclic leftover, bridgeless to order 12",
              [&](std::string& detail) {
        int checked = 0;
        for (const CubicGraph& g : cat12) {
            if (!is_bridgeless(g)) continue;
            if (!verify_acyclic_plus(g)) {
                detail = "no pair for " + write_graph6(g);
                return false;
            }
            ++checked;
        }
        if (!verify_acyclic_plus(petersen())) {
            detail = "no pair for the petersen graph";
            return false;
        }
        detail = "(" + std::to_string(checked) + " catalog graphs plus petersen)";
        return checked > 0;
    });

    criterion(9, "graph6 round trip over the catalog to order 14", [&](std::string& detail) {
        std::vector<CubicGraph> cat14 = generate_cubic_catalog(14);
        for (const CubicGraph& g : cat14) {
            std::string code = write_graph6(g);
            if (!(parse_graph6(code) == g) || write_graph6(parse_graph6(code)) != code) {
                detail = "round trip broke at " + code;
                return false;
            }
        }
        detail = "(" + std::to_string(cat14.size()) + " graphs)";
        return cat14.size() == 621;
    });

    if (failures == 0) {
        std::printf("acceptance: all 9 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
