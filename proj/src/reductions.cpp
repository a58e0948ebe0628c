#include "charm/reductions.hpp"

#include <algorithm>
#include <map>

namespace charm {
namespace {

// edges of g with both endpoints kept, relabeled through to_new
std::vector<Edge> induced_edges(const CubicGraph& g, const std::vector<int>& to_new) {
    std::vector<Edge> out;
    for (Edge e : g.edges())
        if (to_new[e.u] >= 0 && to_new[e.v] >= 0) out.emplace_back(to_new[e.u], to_new[e.v]);
    return out;
}

void make_maps(int n, const std::vector<int>& removed, std::vector<int>& to_old,
               std::vector<int>& to_new) {
    to_new.assign(n, 0);
    for (int v : removed) to_new[v] = -1;
    to_old.clear();
    for (int v = 0; v < n; ++v) {
        if (to_new[v] < 0) continue;
        to_new[v] = static_cast<int>(to_old.size());
        to_old.push_back(v);
    }
}

void check_distinct_endpoints(const std::vector<Edge>& cut) {
    std::vector<int> ends;
    for (Edge f : cut) {
        ends.push_back(f.u);
        ends.push_back(f.v);
    }
    std::sort(ends.begin(), ends.end());
    if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
        fail(errc::neighbors_collide, "cut edges share an endpoint");
}

// the cut must be exactly the crossing set of its own sides
void check_cut_matches(const CubicGraph& g, const EdgeCut& cut) {
    EdgeCut ec = edge_cut_between(g, cut.side_a);
    std::vector<Edge> want(cut.crossing);
    std::sort(want.begin(), want.end());
    if (ec.crossing != want)
        fail(errc::not_a_cyclic_cut, "crossing edges do not match the given sides");
    if (!ec.cyclic) fail(errc::not_a_cyclic_cut, "a side of the cut contains no circuit");
}

bool in_side(const std::vector<int>& side, int v) {
    return std::binary_search(side.begin(), side.end(), v);
}

}  // namespace

// ---------------------------------------------------------------------------
// cyclic 3-cut split
// ---------------------------------------------------------------------------

ThreeCutSplit split_on_3cut(const CubicGraph& g, const EdgeCut& cut) {
    if (cut.crossing.size() != 3)
        fail(errc::wrong_cut_size, "expected a 3-cut, got " + std::to_string(cut.crossing.size()));
    check_cut_matches(g, cut);
    check_distinct_endpoints(cut.crossing);

    ThreeCutSplit out;
    for (int k = 0; k < 3; ++k) out.cut[k] = cut.crossing[k];

    auto build = [&](const std::vector<int>& side, std::array<Edge, 3>& hub_edges,
                     std::vector<int>& to_old, std::vector<int>& to_new) {
        int ns = static_cast<int>(side.size());
        to_new.assign(g.order(), -1);
        to_old.assign(ns + 1, -1);
        for (int k = 0; k < ns; ++k) {
            to_new[side[k]] = k;
            to_old[k] = side[k];
        }
        int hub = ns;
        std::vector<Edge> es = induced_edges(g, to_new);
        for (int k = 0; k < 3; ++k) {
            Edge f = out.cut[k];
            int p = to_new[f.u] >= 0 ? f.u : f.v;
            hub_edges[k] = Edge(to_new[p], hub);
            es.push_back(hub_edges[k]);
        }
        return CubicGraph::from_edges(ns + 1, es);
    };

    std::vector<int> side_a = cut.side_a, side_b = cut.side_b;
    std::sort(side_a.begin(), side_a.end());
    std::sort(side_b.begin(), side_b.end());
    out.g_prime = build(side_a, out.e_prime, out.prime_to_old, out.old_to_prime);
    out.v_prime = static_cast<int>(side_a.size());
    out.g_dprime = build(side_b, out.e_dprime, out.dprime_to_old, out.old_to_dprime);
    out.v_dprime = static_cast<int>(side_b.size());
    return out;
}

PerfectMatching lift_matching_3cut(const ThreeCutSplit& split, const PerfectMatching& m_prime,
                                   const PerfectMatching& m_dprime, int shared_index) {
    if (shared_index < 0 || shared_index > 2)
        fail(errc::bad_index, "cut index must be 0, 1 or 2");
    if (!is_perfect_matching(split.g_prime, m_prime))
        fail(errc::invalid_matching, "m_prime is not a perfect matching of the first side");
    if (!is_perfect_matching(split.g_dprime, m_dprime))
        fail(errc::invalid_matching, "m_dprime is not a perfect matching of the second side");
    if (!m_prime.contains(split.e_prime[shared_index]))
        fail(errc::index_mismatch, "first side does not cover its hub through the shared index");
    if (!m_dprime.contains(split.e_dprime[shared_index]))
        fail(errc::index_mismatch, "second side does not cover its hub through the shared index");

    std::vector<Edge> es{split.cut[shared_index]};
    for (Edge e : m_prime.edges)
        if (e != split.e_prime[shared_index])
            es.emplace_back(split.prime_to_old[e.u], split.prime_to_old[e.v]);
    for (Edge e : m_dprime.edges)
        if (e != split.e_dprime[shared_index])
            es.emplace_back(split.dprime_to_old[e.u], split.dprime_to_old[e.v]);
    return PerfectMatching(std::move(es));
}

std::pair<CircuitCollection, CircuitCollection> rewrite_circuits_3cut(
    const ThreeCutSplit& split, const CircuitCollection& circuits) {
    const auto& o2p = split.old_to_prime;
    const auto& o2d = split.old_to_dprime;
    const int n = static_cast<int>(o2p.size());

    // closes the crossing circuit through one side's hub
    auto close = [&](const Circuit& c, const std::vector<int>& to_new, int hub) {
        const auto& vs = c.vertices;
        const int len = c.length();
        auto kept = [&](int k) { return to_new[vs[k]] >= 0; };
        int start = -1, run = 0;
        for (int k = 0; k < len; ++k) {
            if (kept(k)) ++run;
            if (kept(k) && !kept((k + len - 1) % len)) {
                if (start >= 0)
                    fail(errc::too_many_crossings, "circuit crosses the cut more than twice");
                start = k;
            }
        }
        std::vector<int> path;
        for (int k = 0; k < run; ++k) path.push_back(to_new[vs[(start + k) % len]]);
        // both boundary steps must use cut edges
        Edge enter(vs[start], vs[(start + len - 1) % len]);
        Edge leave(vs[(start + run - 1) % len], vs[(start + run) % len]);
        for (Edge b : {enter, leave})
            if (std::find(split.cut.begin(), split.cut.end(), b) == split.cut.end())
                fail(errc::not_a_cyclic_cut, "circuit leaves a side through a non-cut edge");
        path.push_back(hub);
        return Circuit(std::move(path));
    };

    std::vector<Circuit> cp, cd;
    int crossings = 0;
    for (const Circuit& c : circuits.circuits) {
        bool any_p = false, any_d = false;
        for (int v : c.vertices) {
            if (v < 0 || v >= n) fail(errc::bad_index, "circuit vertex out of range");
            (o2p[v] >= 0 ? any_p : any_d) = true;
        }
        if (any_p && any_d) {
            if (++crossings > 1)
                fail(errc::too_many_crossings, "more than one circuit crosses the cut");
            cp.push_back(close(c, o2p, split.v_prime));
            cd.push_back(close(c, o2d, split.v_dprime));
        } else if (any_p) {
            std::vector<int> vs;
            for (int v : c.vertices) vs.push_back(o2p[v]);
            cp.emplace_back(std::move(vs));
        } else {
            std::vector<int> vs;
            for (int v : c.vertices) vs.push_back(o2d[v]);
            cd.emplace_back(std::move(vs));
        }
    }
    return {CircuitCollection(std::move(cp)), CircuitCollection(std::move(cd))};
}

// ---------------------------------------------------------------------------
// 4-circuit / 4-cut surgery
// ---------------------------------------------------------------------------

namespace {

// shared tail: given kept-side data, attach x to outer_1 and outer_i, y to
// the other two, and assemble the reduced graph
void assemble_g1i(const CubicGraph& g, G1i& s) {
    // to_new arrives seeded: kept vertices >= 0, removed ones -1
    std::vector<int> removed;
    for (int v = 0; v < g.order(); ++v)
        if (s.to_new[v] < 0) removed.push_back(v);
    make_maps(g.order(), removed, s.to_old, s.to_new);

    int ns = static_cast<int>(s.to_old.size());
    s.x = ns;
    s.y = ns + 1;
    std::vector<Edge> es = induced_edges(g, s.to_new);
    for (int k = 0; k < 4; ++k) {
        int gv = (k == 0 || k == s.i - 1) ? s.x : s.y;
        s.attach[k] = Edge(s.to_new[s.outer[k]], gv);
        es.push_back(s.attach[k]);
    }
    es.emplace_back(s.x, s.y);
    s.graph = CubicGraph::from_edges(ns + 2, es);
    s.to_old.push_back(-1);
    s.to_old.push_back(-1);
}

}  // namespace

G1i build_g1i(const CubicGraph& g, const std::array<int, 4>& four_circuit, int i) {
    if (i < 2 || i > 4) fail(errc::bad_index, "i must be 2, 3 or 4");
    G1i s;
    s.i = i;
    s.from_circuit = true;
    for (int k = 0; k < 4; ++k) g.check_vertex(four_circuit[k]);
    for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l)
            if (four_circuit[k] == four_circuit[l])
                fail(errc::not_a_4circuit, "repeated vertex");
    for (int k = 0; k < 4; ++k) {
        int a = four_circuit[k], b = four_circuit[(k + 1) % 4];
        if (!g.has_edge(a, b)) fail(errc::not_a_4circuit, "vertices are not in circuit order");
    }
    for (int k = 0; k < 4; ++k) {
        int v = four_circuit[k];
        s.inner[k] = v;
        s.outer[k] =
            g.third_neighbor(v, four_circuit[(k + 3) % 4], four_circuit[(k + 1) % 4]);
        if (std::find(four_circuit.begin(), four_circuit.end(), s.outer[k]) !=
            four_circuit.end())
            fail(errc::not_a_4circuit, "circuit has a chord");
        s.boundary[k] = Edge(s.outer[k], s.inner[k]);
    }
    for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l)
            if (s.outer[k] == s.outer[l])
                fail(errc::neighbors_collide, "outside neighbors of the circuit collide");

    s.to_new.assign(g.order(), 0);
    for (int v : s.inner) s.to_new[v] = -1;
    assemble_g1i(g, s);
    return s;
}

std::pair<G1i, G1i> build_g1i(const CubicGraph& g, const EdgeCut& cut, int i) {
    if (i < 2 || i > 4) fail(errc::bad_index, "i must be 2, 3 or 4");
    if (cut.crossing.size() != 4)
        fail(errc::wrong_cut_size, "expected a 4-cut, got " + std::to_string(cut.crossing.size()));
    check_cut_matches(g, cut);
    check_distinct_endpoints(cut.crossing);

    std::vector<int> side_a = cut.side_a, side_b = cut.side_b;
    std::sort(side_a.begin(), side_a.end());
    std::sort(side_b.begin(), side_b.end());

    auto build = [&](const std::vector<int>& kept) {
        G1i s;
        s.i = i;
        for (int k = 0; k < 4; ++k) {
            Edge f = cut.crossing[k];
            s.boundary[k] = f;
            s.outer[k] = in_side(kept, f.u) ? f.u : f.v;
            s.inner[k] = f.other(s.outer[k]);
        }
        s.to_new.assign(g.order(), -1);
        for (int v : kept) s.to_new[v] = 0;
        assemble_g1i(g, s);
        return s;
    };
    return {build(side_a), build(side_b)};
}

G1iRewrite rewrite_circuits_g1i(const G1i& side, const CircuitCollection& circuits) {
    G1iRewrite out;
    const int n = static_cast<int>(side.to_new.size());
    bool x_claimed = false, y_claimed = false;
    std::vector<Circuit> kept_circuits;

    for (int ci = 0; ci < circuits.count(); ++ci) {
        const Circuit& c = circuits.circuits[ci];
        const auto& vs = c.vertices;
        const int len = c.length();
        bool any_in = false, any_out = false;
        for (int v : vs) {
            if (v < 0 || v >= n) fail(errc::bad_index, "circuit vertex out of range");
            (side.to_new[v] >= 0 ? any_in : any_out) = true;
        }
        if (!any_in) {
            out.dropped.push_back(ci);
            continue;
        }
        if (!any_out) {
            std::vector<int> mapped;
            for (int v : vs) mapped.push_back(side.to_new[v]);
            kept_circuits.emplace_back(std::move(mapped));
            continue;
        }

        // crossing circuit: rebuild from its kept arcs plus gadget closures
        auto kept = [&](int k) { return side.to_new[vs[k]] >= 0; };
        std::map<int, std::vector<int>> adj;  // reduced-graph ids -> neighbors
        auto add_edge = [&](int a, int b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        };
        int cx = 0, cy = 0;
        bool ok = true;
        for (int k = 0; k < len && ok; ++k) {
            if (!kept(k)) continue;
            int nxt = (k + 1) % len;
            if (kept(nxt)) {
                add_edge(side.to_new[vs[k]], side.to_new[vs[nxt]]);
                continue;
            }
            // vs[k] exits the side here; the step must be a boundary edge
            Edge step(vs[k], vs[nxt]);
            int idx = -1;
            for (int b = 0; b < 4; ++b)
                if (side.boundary[b] == step) idx = b;
            if (idx < 0) fail(errc::bad_index, "circuit crosses outside the boundary edges");
            int gv = (idx == 0 || idx == side.i - 1) ? side.x : side.y;
            (gv == side.x ? cx : cy) += 1;
            add_edge(side.to_new[vs[k]], gv);
        }
        // entries mirror the exits
        for (int k = 0; k < len && ok; ++k) {
            if (!kept(k)) continue;
            int prv = (k + len - 1) % len;
            if (kept(prv)) continue;
            Edge step(vs[k], vs[prv]);
            int idx = -1;
            for (int b = 0; b < 4; ++b)
                if (side.boundary[b] == step) idx = b;
            if (idx < 0) fail(errc::bad_index, "circuit crosses outside the boundary edges");
            int gv = (idx == 0 || idx == side.i - 1) ? side.x : side.y;
            (gv == side.x ? cx : cy) += 1;
            add_edge(side.to_new[vs[k]], gv);
        }
        bool need_xy = (cx % 2) == 1;
        if (need_xy) add_edge(side.x, side.y);
        // claims: a gadget vertex may serve only one output circuit
        if (ok && cx > 0 && x_claimed) ok = false;
        if (ok && cy > 0 && y_claimed) ok = false;
        for (auto& [v, nb] : adj)
            if (nb.size() != 2) ok = false;
        if (!ok) {
            out.dropped.push_back(ci);
            continue;
        }
        if (cx > 0) x_claimed = true;
        if (cy > 0) y_claimed = true;
        if (need_xy) out.uses_xy = true;
        // trace the (possibly split) closed walks
        std::map<int, bool> seen;
        for (auto& [v0, nb0] : adj) {
            if (seen[v0]) continue;
            std::vector<int> cyc{v0};
            seen[v0] = true;
            int prev = v0, cur = adj[v0][0];
            while (cur != v0) {
                cyc.push_back(cur);
                seen[cur] = true;
                auto& nb = adj[cur];
                int nxt = (nb[0] == prev) ? nb[1] : nb[0];
                prev = cur;
                cur = nxt;
            }
            kept_circuits.emplace_back(std::move(cyc));
        }
    }
    out.circuits = CircuitCollection(std::move(kept_circuits));
    return out;
}

std::vector<PerfectMatching> extend_matching_4circuit(const G1i& side, const PerfectMatching& m) {
    if (!is_perfect_matching(side.graph, m))
        fail(errc::invalid_matching, "not a perfect matching of the reduced graph");
    if (!side.from_circuit)
        fail(errc::not_a_4circuit, "side was built from a 4-cut, not a 4-circuit");

    auto base = [&] {
        std::vector<Edge> es;
        for (Edge e : m.edges)
            if (!e.incident(side.x) && !e.incident(side.y))
                es.emplace_back(side.to_old[e.u], side.to_old[e.v]);
        return es;
    };

    std::vector<PerfectMatching> out;
    if (m.contains(Edge(side.x, side.y))) {
        for (int offset : {0, 1}) {
            std::vector<Edge> es = base();
            es.emplace_back(side.inner[offset], side.inner[(offset + 1) % 4]);
            es.emplace_back(side.inner[(offset + 2) % 4], side.inner[(offset + 3) % 4]);
            out.emplace_back(std::move(es));
        }
        return out;
    }
    int a = -1, b = -1;
    for (int k = 0; k < 4; ++k) {
        if (!m.contains(side.attach[k])) continue;
        ((k == 0 || k == side.i - 1) ? a : b) = k;
    }
    if (a < 0 || b < 0) fail(errc::invalid_matching, "gadget vertices are not covered");
    int p = -1, q = -1;
    for (int k = 0; k < 4; ++k)
        if (k != a && k != b) (p < 0 ? p : q) = k;
    if ((q - p) != 1 && !(p == 0 && q == 3))
        fail(errc::invalid_matching, "matching does not extend across the removed circuit");
    std::vector<Edge> es = base();
    es.push_back(side.boundary[a]);
    es.push_back(side.boundary[b]);
    es.emplace_back(side.inner[p], side.inner[q]);
    out.emplace_back(std::move(es));
    return out;
}

BoundaryUse boundary_use(const G1i& side, const PerfectMatching& m) {
    if (!is_perfect_matching(side.graph, m))
        fail(errc::invalid_matching, "not a perfect matching of the reduced graph");
    BoundaryUse u;
    u.xy = m.contains(Edge(side.x, side.y));
    for (int k = 0; k < 4; ++k)
        if (m.contains(side.attach[k])) u.indices.push_back(k);
    return u;
}

PerfectMatching combine_matchings_4cut(const G1i& prime, const G1i& dprime,
                                       const PerfectMatching& m_prime,
                                       const PerfectMatching& m_dprime) {
    BoundaryUse up = boundary_use(prime, m_prime);
    BoundaryUse ud = boundary_use(dprime, m_dprime);
    auto base = [](const G1i& s, const PerfectMatching& m) {
        std::vector<Edge> es;
        for (Edge e : m.edges)
            if (!e.incident(s.x) && !e.incident(s.y))
                es.emplace_back(s.to_old[e.u], s.to_old[e.v]);
        return es;
    };
    std::vector<Edge> es = base(prime, m_prime);
    std::vector<Edge> es2 = base(dprime, m_dprime);
    es.insert(es.end(), es2.begin(), es2.end());
    if (up.xy && ud.xy) return PerfectMatching(std::move(es));
    if (!up.xy && !ud.xy && up.indices == ud.indices && up.indices.size() == 2) {
        for (int k : up.indices) es.push_back(prime.boundary[k]);
        return PerfectMatching(std::move(es));
    }
    fail(errc::index_mismatch, "side matchings do not agree on the boundary");
}

// ---------------------------------------------------------------------------
// distance-2 edge reduction
// ---------------------------------------------------------------------------

EdgeReduction reduce_edge(const CubicGraph& g, Edge f, int u, int alpha, int beta) {
    g.check_edge(f);
    if (!f.incident(u)) fail(errc::bad_index, "u must be an endpoint of f");
    int v = f.other(u);
    g.check_vertex(alpha);
    g.check_vertex(beta);
    if (alpha == v || !g.has_edge(u, alpha))
        fail(errc::bad_index, "alpha must be a neighbor of u other than v");
    if (beta == u || !g.has_edge(v, beta))
        fail(errc::bad_index, "beta must be a neighbor of v other than u");

    EdgeReduction r;
    r.f = f;
    r.u = u;
    r.v = v;
    r.alpha = alpha;
    r.beta = beta;
    r.gamma = g.third_neighbor(u, v, alpha);
    r.delta = g.third_neighbor(v, u, beta);
    if (r.alpha == r.beta || r.alpha == r.delta || r.gamma == r.beta || r.gamma == r.delta)
        fail(errc::would_create_parallel, "the outer neighbors of f are not distinct");
    if (g.has_edge(r.alpha, r.beta) || g.has_edge(r.gamma, r.delta))
        fail(errc::would_create_parallel, "a paired outer edge already exists");

    make_maps(g.order(), {u, v}, r.to_old, r.to_new);
    std::vector<Edge> es = induced_edges(g, r.to_new);
    r.added_ab = Edge(r.to_new[r.alpha], r.to_new[r.beta]);
    r.added_gd = Edge(r.to_new[r.gamma], r.to_new[r.delta]);
    es.push_back(r.added_ab);
    es.push_back(r.added_gd);
    r.graph = CubicGraph::from_edges(g.order() - 2, es);
    return r;
}

PerfectMatching extend_matching_edge_reduction(const EdgeReduction& red,
                                               const PerfectMatching& m_prime) {
    if (!is_perfect_matching(red.graph, m_prime))
        fail(errc::invalid_matching, "not a perfect matching of the reduced graph");
    if (m_prime.contains(red.added_ab))
        fail(errc::invalid_matching, "matching uses the alpha-beta edge; no extension exists");
    std::vector<Edge> es;
    for (Edge e : m_prime.edges)
        if (e != red.added_gd) es.emplace_back(red.to_old[e.u], red.to_old[e.v]);
    if (m_prime.contains(red.added_gd)) {
        es.emplace_back(red.u, red.gamma);
        es.emplace_back(red.v, red.delta);
    } else {
        es.push_back(red.f);
    }
    return PerfectMatching(std::move(es));
}

Circuit rewrite_circuit_through_f(const EdgeReduction& red, const Circuit& c_f) {
    if (!c_f.has_edge(red.f)) fail(errc::pairing_mismatch, "circuit does not traverse f");
    const auto& vs = c_f.vertices;
    const int len = c_f.length();
    int pu = -1;
    for (int k = 0; k < len; ++k)
        if (vs[k] == red.u) pu = k;
    int before = vs[(pu + len - 1) % len], after = vs[(pu + 1) % len];
    // orient so the walk reads p, u, v, q
    int p, q, vpos;
    if (after == red.v) {
        p = before;
        vpos = (pu + 1) % len;
        q = vs[(pu + 2) % len];
    } else {
        p = after;
        vpos = (pu + len - 1) % len;
        q = vs[(pu + len - 2) % len];
    }
    bool aligned = (p == red.alpha && q == red.beta) || (p == red.gamma && q == red.delta);
    if (!aligned)
        fail(errc::pairing_mismatch, "circuit traverses f against the reduction's pairing");
    std::vector<int> mapped;
    for (int k = 0; k < len; ++k)
        if (k != pu && k != vpos) mapped.push_back(red.to_new[vs[k]]);
    return Circuit(std::move(mapped));
}

// ---------------------------------------------------------------------------
// 5-circuit smoothing
// ---------------------------------------------------------------------------

FiveCircuitSmoothing smooth_5circuit(const CubicGraph& g, const std::array<int, 5>& t) {
    for (int v : t) g.check_vertex(v);
    for (int k = 0; k < 5; ++k)
        for (int l = k + 1; l < 5; ++l)
            if (t[k] == t[l]) fail(errc::not_a_5circuit, "repeated vertex");
    for (int k = 0; k < 5; ++k)
        if (!g.has_edge(t[k], t[(k + 1) % 5]))
            fail(errc::not_a_5circuit, "vertices are not in circuit order");

    FiveCircuitSmoothing s;
    s.t = t;
    for (int k = 0; k < 5; ++k) {
        s.t_out[k] = g.third_neighbor(t[k], t[(k + 4) % 5], t[(k + 1) % 5]);
        if (std::find(t.begin(), t.end(), s.t_out[k]) != t.end())
            fail(errc::not_a_5circuit, "circuit has a chord");
    }
    for (int k = 0; k < 5; ++k)
        for (int l = k + 1; l < 5; ++l)
            if (s.t_out[k] == s.t_out[l])
                fail(errc::neighbors_collide, "outside neighbors of the circuit collide");

    make_maps(g.order(), {t[2], t[3]}, s.to_old, s.to_new);
    std::vector<Edge> es = induced_edges(g, s.to_new);
    s.p = Edge(s.to_new[t[1]], s.to_new[s.t_out[2]]);
    s.q = Edge(s.to_new[t[4]], s.to_new[s.t_out[3]]);
    es.push_back(s.p);
    es.push_back(s.q);
    s.graph = CubicGraph::from_edges(g.order() - 2, es);
    return s;
}

PerfectMatching extend_matching_smoothing(const FiveCircuitSmoothing& s,
                                          const PerfectMatching& m_prime) {
    if (!is_perfect_matching(s.graph, m_prime))
        fail(errc::invalid_matching, "not a perfect matching of the reduced graph");
    const auto& t = s.t;
    bool has_p = m_prime.contains(s.p), has_q = m_prime.contains(s.q);
    std::vector<Edge> es;
    for (Edge e : m_prime.edges)
        if (e != s.p && e != s.q) es.emplace_back(s.to_old[e.u], s.to_old[e.v]);

    auto drop = [&](Edge e) { es.erase(std::find(es.begin(), es.end(), e)); };
    Edge t1t2(t[0], t[1]), t1t5(t[0], t[4]);
    if (!has_p && !has_q) {
        es.emplace_back(t[2], t[3]);
    } else if (has_q && !has_p && std::find(es.begin(), es.end(), t1t2) != es.end()) {
        drop(t1t2);
        es.push_back(t1t5);
        es.emplace_back(t[1], t[2]);
        es.emplace_back(t[3], s.t_out[3]);
    } else if (has_p && !has_q && std::find(es.begin(), es.end(), t1t5) != es.end()) {
        drop(t1t5);
        es.push_back(t1t2);
        es.emplace_back(t[3], t[4]);
        es.emplace_back(t[2], s.t_out[2]);
    } else {
        fail(errc::invalid_matching, "matching does not extend across the smoothing");
    }
    return PerfectMatching(std::move(es));
}

}  // namespace charm
