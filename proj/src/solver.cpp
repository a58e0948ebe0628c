#include "charm/solver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charm/connectivity.hpp"
#include "charm/enumerate.hpp"
#include "charm/error.hpp"
#include "charm/families.hpp"
#include "charm/reductions.hpp"

namespace charm {

bool charm_witness_ok(const CubicGraph& g, Edge e, const CircuitCollection& circuits,
                      const PerfectMatching& m) {
    return is_perfect_matching(g, m) && m.contains(e) && matching_hits_all(m, circuits);
}

std::optional<PerfectMatching> oracle_charm(const CubicGraph& g, Edge e,
                                            const CircuitCollection& circuits) {
    g.check_edge(e);
    validate_collection(g, circuits);
    for (const PerfectMatching& m : enumerate_perfect_matchings(g, e))
        if (matching_hits_all(m, circuits)) return m;
    return std::nullopt;
}

namespace {

// backtracking signal; becomes internal_no_witness at the public boundary
struct no_witness {};

// circuits through e are met by any matching through e, so they can go
CircuitCollection drop_met_by_edge(const CircuitCollection& cc, Edge e) {
    std::vector<Circuit> keep;
    for (const Circuit& c : cc.circuits)
        if (!c.has_edge(e)) keep.push_back(c);
    return CircuitCollection(std::move(keep));
}

CircuitCollection without(const CircuitCollection& cc, const Circuit& skip) {
    std::vector<Circuit> keep;
    for (const Circuit& c : cc.circuits)
        if (!(c == skip)) keep.push_back(c);
    return CircuitCollection(std::move(keep));
}

// relabel every circuit, or nullopt when one touches a deleted vertex
std::optional<CircuitCollection> map_collection(const CircuitCollection& cc,
                                                const std::vector<int>& to_new) {
    std::vector<Circuit> out;
    out.reserve(cc.circuits.size());
    for (const Circuit& c : cc.circuits) {
        std::vector<int> vs;
        vs.reserve(c.vertices.size());
        for (int w : c.vertices) {
            if (to_new[w] < 0) return std::nullopt;
            vs.push_back(to_new[w]);
        }
        out.emplace_back(std::move(vs));
    }
    return CircuitCollection(std::move(out));
}

std::pair<int, int> circuit_neighbors(const Circuit& c, int w) {
    int len = c.length();
    for (int t = 0; t < len; ++t)
        if (c.vertices[t] == w)
            return {c.vertices[(t + len - 1) % len], c.vertices[(t + 1) % len]};
    fail(errc::bad_index, "vertex not on circuit");
}

struct solver {
    SolveConfig cfg;
    int budget;
    std::vector<ReductionStep> trace;
    bool fallback = false;

    explicit solver(const SolveConfig& c) : cfg(c), budget(c.max_backtracks) {}

    void note(std::string rule, std::string detail) {
        trace.push_back({std::move(rule), std::move(detail)});
    }
    void spend() {
        if (budget > 0) --budget;
    }
    bool broke() const { return budget <= 0; }

    static std::string tag(const CubicGraph& g, int depth) {
        return "n=" + std::to_string(g.order()) + " depth=" + std::to_string(depth);
    }

    PerfectMatching solve(const CubicGraph& g, Edge e, const CircuitCollection& prescribed,
                          int depth);

    std::optional<PerfectMatching> via_three_cut(const CubicGraph& g, Edge e,
                                                 const CircuitCollection& cc, const EdgeCut& cut,
                                                 int depth);
    std::optional<PerfectMatching> via_four_circuit(const CubicGraph& g, Edge e,
                                                    const CircuitCollection& cc,
                                                    const std::vector<Circuit>& fours, int depth);
    std::optional<PerfectMatching> via_four_cut(const CubicGraph& g, Edge e,
                                                const CircuitCollection& cc, const EdgeCut& cut,
                                                int depth);
    std::optional<PerfectMatching> via_reductions(const CubicGraph& g, Edge e,
                                                  const CircuitCollection& cc, int depth);
    std::optional<PerfectMatching> reduction_candidate(const CubicGraph& g, Edge e,
                                                       const CircuitCollection& cc, Edge f, int u,
                                                       int v, int alpha, int depth);
};

PerfectMatching solver::solve(const CubicGraph& g, Edge e, const CircuitCollection& prescribed,
                              int depth) {
    const CircuitCollection cc = drop_met_by_edge(prescribed, e);
    const int n = g.order();

    if (n <= cfg.brute_force_threshold) {
        auto m = oracle_charm(g, e, cc);
        if (!m) throw no_witness{};
        note("oracle", tag(g, depth));
        return *m;
    }

    if (is_klee(g)) {
        // sides produced by the surgeries may be Klee even though the top
        // level input never is; the colour classes are the cheap witnesses
        for (const PerfectMatching& cls : klee_coloring(g))
            if (cls.contains(e) && matching_hits_all(cls, cc)) {
                note("klee-colouring", tag(g, depth));
                return cls;
            }
        auto m = oracle_charm(g, e, cc);
        if (!m) throw no_witness{};
        note("klee-oracle", tag(g, depth));
        return *m;
    }

    LadderFamily fam = classify_ladder_family(g);
    if (fam.kind == LadderKind::ladder || fam.kind == LadderKind::moebius_ladder ||
        fam.kind == LadderKind::quasi_ladder) {
        // every edge of these families lies in a matching whose complement is
        // a spanning circuit and in a second matching besides, so the oracle
        // cannot come back empty here
        auto m = oracle_charm(g, e, cc);
        if (!m) throw no_witness{};
        note(std::string("family-") + ladder_kind_name(fam.kind), tag(g, depth));
        return *m;
    }

    // cyclic cuts of size three come first; every 1- or 2-cut of a cubic
    // graph is cyclic, so a size-3 result also certifies 3-connectivity.
    // the branches are not mutually exclusive: each one only ever returns a
    // verified witness, so when one comes up empty the next applicable one
    // gets a turn before the oracle fallback
    auto cut = find_cyclic_edge_cut(g, 3);
    if (!cut || static_cast<int>(cut->crossing.size()) == 3) {
        if (cut)
            if (auto m = via_three_cut(g, e, cc, *cut, depth)) return *m;
        if (!broke()) {
            auto fours = four_circuits_of(g);
            if (!fours.empty()) {
                if (auto m = via_four_circuit(g, e, cc, fours, depth)) return *m;
            } else if (!cut) {
                if (auto cut4 = find_cyclic_edge_cut(g, 4))
                    if (auto m = via_four_cut(g, e, cc, *cut4, depth)) return *m;
            }
        }
        if (!broke() && cfg.enable_distance2_reductions && girth(g) >= 5)
            if (auto m = via_reductions(g, e, cc, depth)) return *m;
    }

    auto m = oracle_charm(g, e, cc);
    if (!m) throw no_witness{};
    fallback = true;
    note("oracle-fallback", tag(g, depth));
    return *m;
}

std::optional<PerfectMatching> solver::via_three_cut(const CubicGraph& g, Edge e,
                                                     const CircuitCollection& cc,
                                                     const EdgeCut& cut, int depth) {
    ThreeCutSplit sp = split_on_3cut(g, cut);
    auto [cp, cd] = rewrite_circuits_3cut(sp, cc);

    auto finish = [&](const PerfectMatching& mp, const PerfectMatching& md,
                      int idx) -> std::optional<PerfectMatching> {
        PerfectMatching m = lift_matching_3cut(sp, mp, md, idx);
        if (!charm_witness_ok(g, e, cc, m)) return std::nullopt;
        note("3cut", tag(g, depth) + " shared index " + std::to_string(idx));
        return m;
    };

    int ei = -1;
    for (int k = 0; k < 3; ++k)
        if (sp.cut[k] == e) ei = k;

    if (ei >= 0) {
        // e is a cut edge: both sides are forced through their index ei hub edge
        try {
            PerfectMatching mp = solve(sp.g_prime, sp.e_prime[ei], cp, depth + 1);
            PerfectMatching md = solve(sp.g_dprime, sp.e_dprime[ei], cd, depth + 1);
            if (auto m = finish(mp, md, ei)) return m;
        } catch (const no_witness&) {
        }
        spend();
        return std::nullopt;
    }

    // e sits inside one side; solve that side first, read off which hub edge
    // its matching picked, and force the other side through the same index
    bool on_prime = sp.old_to_prime[e.u] >= 0 && sp.old_to_prime[e.v] >= 0;
    const CubicGraph& ga = on_prime ? sp.g_prime : sp.g_dprime;
    const CubicGraph& gb = on_prime ? sp.g_dprime : sp.g_prime;
    const auto& hub_a = on_prime ? sp.e_prime : sp.e_dprime;
    const auto& hub_b = on_prime ? sp.e_dprime : sp.e_prime;
    const auto& cca = on_prime ? cp : cd;
    const auto& ccb = on_prime ? cd : cp;
    const auto& to_a = on_prime ? sp.old_to_prime : sp.old_to_dprime;
    Edge ea(to_a[e.u], to_a[e.v]);

    int tried_idx = -1;
    try {
        PerfectMatching ma = solve(ga, ea, cca, depth + 1);
        int idx = -1;
        for (int k = 0; k < 3; ++k)
            if (ma.contains(hub_a[k])) idx = k;
        if (idx < 0) fail(errc::index_mismatch, "side matching misses the hub");
        tried_idx = idx;
        PerfectMatching mb = solve(gb, hub_b[idx], ccb, depth + 1);
        auto m = on_prime ? finish(ma, mb, idx) : finish(mb, ma, idx);
        if (m) return m;
    } catch (const no_witness&) {
    }
    spend();
    if (broke()) return std::nullopt;

    // the first pass committed to whichever hub index the recursion happened
    // to pick; before giving up on this cut, sweep the remaining indices by
    // enumerating the matchings of the side holding e directly
    if (ga.order() <= 20) {
        std::array<std::optional<PerfectMatching>, 3> pick;
        for (const PerfectMatching& ma : enumerate_perfect_matchings(ga, ea)) {
            if (!matching_hits_all(ma, cca)) continue;
            for (int k = 0; k < 3; ++k)
                if (k != tried_idx && !pick[k] && ma.contains(hub_a[k])) pick[k] = ma;
        }
        for (int k = 0; k < 3; ++k) {
            if (!pick[k] || broke()) continue;
            try {
                PerfectMatching mb = solve(gb, hub_b[k], ccb, depth + 1);
                auto m = on_prime ? finish(*pick[k], mb, k) : finish(mb, *pick[k], k);
                if (m) return m;
            } catch (const no_witness&) {
            }
            spend();
        }
    }
    return std::nullopt;
}

std::optional<PerfectMatching> solver::via_four_circuit(const CubicGraph& g, Edge e,
                                                        const CircuitCollection& cc,
                                                        const std::vector<Circuit>& fours,
                                                        int depth) {
    for (const Circuit& c : fours) {
        if (broke()) return std::nullopt;
        std::array<int, 4> q{c.vertices[0], c.vertices[1], c.vertices[2], c.vertices[3]};
        // the diagonal attachment is the one whose unique extension always
        // lands on an edge of the circuit, so it goes first
        for (int i : {3, 2, 4}) {
            if (broke()) return std::nullopt;
            G1i side;
            try {
                side = build_g1i(g, q, i);
            } catch (const error&) {
                break;  // chord or colliding outer vertices: no i can work
            }
            Edge ep;
            if (c.has_edge(e)) {
                ep = Edge(side.x, side.y);
            } else {
                int k = -1;
                for (int t = 0; t < 4; ++t)
                    if (side.boundary[t] == e) k = t;
                if (k >= 0)
                    ep = side.attach[k];
                else if (side.to_new[e.u] >= 0 && side.to_new[e.v] >= 0)
                    ep = Edge(side.to_new[e.u], side.to_new[e.v]);
                else
                    break;  // would be a chord of the circuit
            }
            G1iRewrite rw = rewrite_circuits_g1i(side, cc);
            try {
                PerfectMatching ms = solve(side.graph, ep, rw.circuits, depth + 1);
                std::vector<PerfectMatching> lifts;
                try {
                    lifts = extend_matching_4circuit(side, ms);
                } catch (const error& err) {
                    if (err.code() != errc::invalid_matching) throw;
                }
                for (const PerfectMatching& m : lifts)
                    if (charm_witness_ok(g, e, cc, m)) {
                        note("4circuit", tag(g, depth) + " i=" + std::to_string(i));
                        return m;
                    }
            } catch (const no_witness&) {
            }
            spend();
        }
    }
    return std::nullopt;
}

std::optional<PerfectMatching> solver::via_four_cut(const CubicGraph& g, Edge e,
                                                    const CircuitCollection& cc,
                                                    const EdgeCut& cut, int depth) {
    if (cut.crossing.size() != 4) return std::nullopt;
    static constexpr std::array<int, 3> order{3, 2, 4};

    int kc = -1;
    for (int t = 0; t < 4; ++t)
        if (cut.crossing[t] == e) kc = t;

    if (kc >= 0) {
        // e crosses the cut: solve each side through its image of e and keep
        // the first pair of sides agreeing on the other boundary index
        auto side_solve = [&](bool first,
                              int i) -> std::optional<std::pair<G1i, PerfectMatching>> {
            std::pair<G1i, G1i> both;
            try {
                both = build_g1i(g, cut, i);
            } catch (const error&) {
                return std::nullopt;
            }
            G1i side = first ? both.first : both.second;
            G1iRewrite rw = rewrite_circuits_g1i(side, cc);
            try {
                PerfectMatching m = solve(side.graph, side.attach[kc], rw.circuits, depth + 1);
                return std::make_pair(std::move(side), std::move(m));
            } catch (const no_witness&) {
                return std::nullopt;
            }
        };
        std::map<int, std::optional<std::pair<G1i, PerfectMatching>>> got_a, got_b;
        for (int ia : order) {
            for (int ib : order) {
                if (broke()) return std::nullopt;
                if (!got_a.count(ia)) got_a[ia] = side_solve(true, ia);
                if (!got_b.count(ib)) got_b[ib] = side_solve(false, ib);
                if (!got_a[ia] || !got_b[ib]) {
                    spend();
                    continue;
                }
                try {
                    PerfectMatching m = combine_matchings_4cut(
                        got_a[ia]->first, got_b[ib]->first, got_a[ia]->second, got_b[ib]->second);
                    if (charm_witness_ok(g, e, cc, m)) {
                        note("4cut", tag(g, depth) + " i=" + std::to_string(ia) + "," +
                                         std::to_string(ib));
                        return m;
                    }
                } catch (const error& err) {
                    if (err.code() != errc::index_mismatch) throw;
                }
                spend();
            }
        }
        return std::nullopt;
    }

    // e sits inside one side; align the other side with the boundary edges
    // (or the xy edge) that the primary matching used
    bool e_on_a = std::binary_search(cut.side_a.begin(), cut.side_a.end(), e.u);
    for (int ip : order) {
        if (broke()) return std::nullopt;
        std::pair<G1i, G1i> bp;
        try {
            bp = build_g1i(g, cut, ip);
        } catch (const error&) {
            continue;
        }
        const G1i& prim = e_on_a ? bp.first : bp.second;
        Edge ep(prim.to_new[e.u], prim.to_new[e.v]);
        G1iRewrite rwp = rewrite_circuits_g1i(prim, cc);
        PerfectMatching mp;
        try {
            mp = solve(prim.graph, ep, rwp.circuits, depth + 1);
        } catch (const no_witness&) {
            spend();
            continue;
        }
        BoundaryUse use = boundary_use(prim, mp);
        for (int is : order) {
            if (broke()) return std::nullopt;
            std::pair<G1i, G1i> bs;
            try {
                bs = build_g1i(g, cut, is);
            } catch (const error&) {
                continue;
            }
            const G1i& sec = e_on_a ? bs.second : bs.first;
            G1iRewrite rws = rewrite_circuits_g1i(sec, cc);
            std::vector<Edge> prescriptions;
            if (use.xy)
                prescriptions.push_back(Edge(sec.x, sec.y));
            else
                for (int t : use.indices) prescriptions.push_back(sec.attach[t]);
            for (Edge es : prescriptions) {
                if (broke()) return std::nullopt;
                try {
                    PerfectMatching ms = solve(sec.graph, es, rws.circuits, depth + 1);
                    PerfectMatching m =
                        e_on_a ? combine_matchings_4cut(prim, sec, mp, ms)
                               : combine_matchings_4cut(sec, prim, ms, mp);
                    if (charm_witness_ok(g, e, cc, m)) {
                        note("4cut", tag(g, depth) + " i=" + std::to_string(ip) + "," +
                                         std::to_string(is));
                        return m;
                    }
                } catch (const no_witness&) {
                } catch (const error& err) {
                    if (err.code() != errc::index_mismatch) throw;
                }
                spend();
            }
        }
    }
    return std::nullopt;
}

std::optional<PerfectMatching> solver::via_reductions(const CubicGraph& g, Edge e,
                                                      const CircuitCollection& cc, int depth) {
    // candidates f at line-graph distance exactly two from e; edges() is
    // sorted, so ties already come in canonical order
    for (Edge f : g.edges()) {
        if (broke()) return std::nullopt;
        if (edge_distance(g, e, f) != 2) continue;
        for (int su : {0, 1}) {
            int u = su == 0 ? f.u : f.v;
            int v = f.other(u);
            for (int alpha : {e.u, e.v}) {
                if (!g.has_edge(u, alpha)) continue;
                if (auto m = reduction_candidate(g, e, cc, f, u, v, alpha, depth)) return m;
                if (broke()) return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

std::optional<PerfectMatching> solver::reduction_candidate(const CubicGraph& g, Edge e,
                                                           const CircuitCollection& cc, Edge f,
                                                           int u, int v, int alpha, int depth) {
    const Circuit* c_f = nullptr;
    const Circuit* c_v = nullptr;
    for (const Circuit& c : cc.circuits) {
        if (c.has_edge(f)) {
            c_f = &c;
            continue;
        }
        if (c.has_vertex(u)) return std::nullopt;  // u cannot be deleted under this circuit
        if (c.has_vertex(v)) c_v = &c;
    }

    if (c_f) {
        // align the pairing with the way the circuit walks through f
        auto [p0, p1] = circuit_neighbors(*c_f, u);
        int p = p0 == v ? p1 : p0;
        auto [q0, q1] = circuit_neighbors(*c_f, v);
        int q = q0 == u ? q1 : q0;
        int beta = p == alpha ? q : g.third_neighbor(v, u, q);

        EdgeReduction red;
        try {
            red = reduce_edge(g, f, u, alpha, beta);
        } catch (const error&) {
            spend();
            return std::nullopt;
        }

        if (is_klee(red.graph)) {
            // the aligned pairing collapsed into a Klee graph; the swapped
            // one cannot, and its extension meets the circuit by itself
            int beta2 = g.third_neighbor(v, u, beta);
            EdgeReduction red2;
            try {
                red2 = reduce_edge(g, f, u, alpha, beta2);
            } catch (const error&) {
                spend();
                return std::nullopt;
            }
            if (is_klee(red2.graph)) {
                spend();
                return std::nullopt;
            }
            auto rest = map_collection(without(cc, *c_f), red2.to_new);
            if (!rest) {
                spend();
                return std::nullopt;
            }
            try {
                Edge er(red2.to_new[e.u], red2.to_new[e.v]);
                PerfectMatching ms = solve(red2.graph, er, *rest, depth + 1);
                PerfectMatching m = extend_matching_edge_reduction(red2, ms);
                if (charm_witness_ok(g, e, cc, m)) {
                    note("reduce-swapped", tag(g, depth) + " f=" + to_string(f));
                    return m;
                }
            } catch (const no_witness&) {
            } catch (const error& err) {
                if (err.code() != errc::invalid_matching) throw;
            }
            spend();
            return std::nullopt;
        }

        auto rest = map_collection(without(cc, *c_f), red.to_new);
        if (!rest) {
            spend();
            return std::nullopt;
        }
        try {
            Circuit cf2 = rewrite_circuit_through_f(red, *c_f);
            std::vector<Circuit> cs = rest->circuits;
            cs.push_back(cf2);
            Edge er(red.to_new[e.u], red.to_new[e.v]);
            PerfectMatching ms = solve(red.graph, er, CircuitCollection(std::move(cs)), depth + 1);
            PerfectMatching m = extend_matching_edge_reduction(red, ms);
            if (charm_witness_ok(g, e, cc, m)) {
                note("reduce", tag(g, depth) + " f=" + to_string(f));
                return m;
            }
        } catch (const no_witness&) {
        } catch (const error& err) {
            if (err.code() != errc::invalid_matching && err.code() != errc::pairing_mismatch)
                throw;
        }
        spend();
        return std::nullopt;
    }

    if (c_v) {
        auto [b0, b1] = circuit_neighbors(*c_v, v);
        // double reduction: shorten the circuit by the path v-beta-y before
        // the second cut, trying both ways around
        for (int ori : {0, 1}) {
            if (broke()) return std::nullopt;
            int beta = ori == 0 ? b0 : b1;
            auto [y0, y1] = circuit_neighbors(*c_v, beta);
            int y = y0 == v ? y1 : y0;
            auto [z0, z1] = circuit_neighbors(*c_v, y);
            int z = z0 == beta ? z1 : z0;
            int x = g.third_neighbor(y, beta, z);

            EdgeReduction red1, red2;
            try {
                red1 = reduce_edge(g, f, u, alpha, beta);
                if (red1.to_new[x] < 0 || red1.to_new[e.u] < 0 || red1.to_new[e.v] < 0) {
                    spend();
                    continue;
                }
                Edge f2(red1.to_new[beta], red1.to_new[y]);
                red2 = reduce_edge(red1.graph, f2, red1.to_new[beta], red1.to_new[alpha],
                                   red1.to_new[x]);
            } catch (const error&) {
                spend();
                continue;
            }
            if (red2.to_new[red1.to_new[e.u]] < 0 || red2.to_new[red1.to_new[e.v]] < 0) {
                spend();
                continue;
            }
            auto once = map_collection(without(cc, *c_v), red1.to_new);
            if (!once) {
                spend();
                continue;
            }
            auto twice = map_collection(*once, red2.to_new);
            if (!twice) {
                spend();
                continue;
            }
            try {
                Edge er(red2.to_new[red1.to_new[e.u]], red2.to_new[red1.to_new[e.v]]);
                PerfectMatching ms = solve(red2.graph, er, *twice, depth + 1);
                PerfectMatching m1 = extend_matching_edge_reduction(red2, ms);
                PerfectMatching m = extend_matching_edge_reduction(red1, m1);
                if (charm_witness_ok(g, e, cc, m)) {
                    note("reduce-double", tag(g, depth) + " f=" + to_string(f));
                    return m;
                }
            } catch (const no_witness&) {
            } catch (const error& err) {
                if (err.code() != errc::invalid_matching) throw;
            }
            spend();
        }
        // endgame: one reduction with the traversed circuit dropped, hoping
        // the extension happens to meet it; the final check arbitrates
        for (int ori : {0, 1}) {
            if (broke()) return std::nullopt;
            int beta = ori == 0 ? b0 : b1;
            EdgeReduction red;
            try {
                red = reduce_edge(g, f, u, alpha, beta);
            } catch (const error&) {
                spend();
                continue;
            }
            auto rest = map_collection(without(cc, *c_v), red.to_new);
            if (!rest) {
                spend();
                continue;
            }
            try {
                Edge er(red.to_new[e.u], red.to_new[e.v]);
                PerfectMatching ms = solve(red.graph, er, *rest, depth + 1);
                PerfectMatching m = extend_matching_edge_reduction(red, ms);
                if (charm_witness_ok(g, e, cc, m)) {
                    note("reduce-endgame", tag(g, depth) + " f=" + to_string(f));
                    return m;
                }
            } catch (const no_witness&) {
            } catch (const error& err) {
                if (err.code() != errc::invalid_matching) throw;
            }
            spend();
        }
        return std::nullopt;
    }

    // no circuit anywhere near f: plain reduction, both pairings
    for (int sb : {0, 1}) {
        if (broke()) return std::nullopt;
        auto nv = g.neighbors(v);
        std::array<int, 2> bs{};
        int w = 0;
        for (int t = 0; t < 3; ++t)
            if (nv[t] != u) bs[w++] = nv[t];
        int beta = bs[sb];
        EdgeReduction red;
        try {
            red = reduce_edge(g, f, u, alpha, beta);
        } catch (const error&) {
            spend();
            continue;
        }
        auto rest = map_collection(cc, red.to_new);
        if (!rest) {
            spend();
            continue;
        }
        try {
            Edge er(red.to_new[e.u], red.to_new[e.v]);
            PerfectMatching ms = solve(red.graph, er, *rest, depth + 1);
            PerfectMatching m = extend_matching_edge_reduction(red, ms);
            if (charm_witness_ok(g, e, cc, m)) {
                note("reduce", tag(g, depth) + " f=" + to_string(f));
                return m;
            }
        } catch (const no_witness&) {
        } catch (const error& err) {
            if (err.code() != errc::invalid_matching) throw;
        }
        spend();
    }
    return std::nullopt;
}

}  // namespace

CharmResult charm_matching(const CubicGraph& g, Edge e, const CircuitCollection& circuits,
                           const SolveConfig& config) {
    // every 1- or 2-edge-cut of a cubic graph is cyclic, so this check is
    // exactly cyclic 3-edge-connectivity
    if (find_cyclic_edge_cut(g, 2))
        fail(errc::connectivity_too_low, "input must be cyclically 3-edge-connected");
    if (is_klee(g))
        fail(errc::klee_input, "Klee graphs admit prescriptions with no witness");
    g.check_edge(e);
    validate_collection(g, circuits);

    SolveConfig cfg = config;
    cfg.brute_force_threshold = std::max(cfg.brute_force_threshold, 6);

    solver s(cfg);
    try {
        PerfectMatching m = s.solve(g, e, circuits, 0);
        if (!charm_witness_ok(g, e, circuits, m))
            fail(errc::internal_no_witness, "lifted matching failed the final check");
        return {std::move(m), std::move(s.trace), s.fallback};
    } catch (const no_witness&) {
        fail(errc::internal_no_witness, "no witness found, contradicting the main theorem");
    }
}

PerfectMatching charm_matching_any(const CubicGraph& g, const CircuitCollection& circuits,
                                   const SolveConfig& config) {
    if (find_cyclic_edge_cut(g, 2))
        fail(errc::connectivity_too_low, "input must be cyclically 3-edge-connected");
    validate_collection(g, circuits);
    if (is_klee(g)) {
        // some colour class of the unique colouring meets every circuit of a
        // disjoint collection
        for (const PerfectMatching& cls : klee_coloring(g))
            if (matching_hits_all(cls, circuits)) return cls;
        fail(errc::internal_no_witness, "no colour class meets the collection");
    }
    Edge e = circuits.empty() ? g.edges().front() : circuits.circuits.front().edges().front();
    return charm_matching(g, e, circuits, config).matching;
}

PerfectMatching acyclic_complement(const CubicGraph& g, const OnePlusFactor& factor, Edge e,
                                   const SolveConfig& config) {
    validate_factor(g, factor);
    CircuitCollection cf = circuits_from_one_plus_factor(g, factor);
    return charm_matching(g, e, cf, config).matching;
}

PerfectMatching second_matching(const CubicGraph& g, const PerfectMatching& m1,
                                const SolveConfig& config) {
    if (!is_perfect_matching(g, m1)) fail(errc::invalid_matching, "m1 is not a perfect matching");
    CircuitCollection two_factor = circuits_from_one_plus_factor(g, OnePlusFactor(m1.edges));
    return charm_matching_any(g, two_factor, config);
}

}  // namespace charm
