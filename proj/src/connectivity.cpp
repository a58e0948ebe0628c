#include "charm/connectivity.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>

#include "charm/enumerate.hpp"
#include "charm/error.hpp"

namespace charm {
namespace {

// Components of g minus the given edges.  Returns the component count and
// fills comp with labels 0..count-1.
int components_without(const CubicGraph& g, const std::vector<Edge>& removed,
                       std::vector<int>& comp) {
    const int n = g.order();
    comp.assign(n, -1);
    int parts = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = parts;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (comp[w] >= 0) continue;
                if (std::find(removed.begin(), removed.end(), Edge(v, w)) != removed.end())
                    continue;
                comp[w] = parts;
                stack.push_back(w);
            }
        }
        ++parts;
    }
    return parts;
}

// Does the subgraph induced on {v : in[v] == val} contain a circuit?
bool side_has_circuit(const CubicGraph& g, const std::vector<char>& in, char val) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (in[s] != val || seen[s]) continue;
        int verts = 0, deg = 0;
        seen[s] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++verts;
            for (int w : g.neighbors(v)) {
                if (in[w] != val) continue;
                ++deg;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (deg / 2 >= verts) return true;
    }
    return false;
}

// Some circuit inside the subgraph induced on {v : keep[v]}, as a vertex
// sequence, or nullopt when that subgraph is a forest.
std::optional<std::vector<int>> any_circuit_in(const CubicGraph& g,
                                               const std::vector<char>& keep) {
    const int n = g.order();
    std::vector<int> parent(n, -2);  // -2 unvisited, -1 root
    for (int s = 0; s < n; ++s) {
        if (!keep[s] || parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (!keep[w] || w == parent[v]) continue;
                if (parent[w] == -2) {
                    parent[w] = v;
                    stack.push_back(w);
                } else {
                    // walk both tree paths up to their meeting point
                    std::vector<int> pv{v}, pw{w};
                    std::set<int> on_pv{v};
                    for (int x = v; parent[x] >= 0; x = parent[x]) {
                        pv.push_back(parent[x]);
                        on_pv.insert(parent[x]);
                    }
                    while (!on_pv.count(pw.back())) pw.push_back(parent[pw.back()]);
                    int meet = pw.back();
                    std::vector<int> cyc;
                    for (int x : pv) {
                        cyc.push_back(x);
                        if (x == meet) break;
                    }
                    for (size_t i = pw.size() - 1; i-- > 0;) cyc.push_back(pw[i]);
                    if (cyc.size() >= 3) return cyc;
                }
            }
        }
    }
    return std::nullopt;
}

// If the edge set is exactly the crossing of some bipartition with a circuit
// on both sides, return that cut.
std::optional<EdgeCut> make_cyclic_cut(const CubicGraph& g, const std::vector<Edge>& cut) {
    std::vector<int> comp;
    const int parts = components_without(g, cut, comp);
    if (parts < 2) return std::nullopt;
    for (Edge e : cut)
        if (comp[e.u] == comp[e.v]) return std::nullopt;

    // 2-colour the component graph so every cut edge crosses
    std::vector<std::vector<int>> cadj(parts);
    for (Edge e : cut) {
        cadj[comp[e.u]].push_back(comp[e.v]);
        cadj[comp[e.v]].push_back(comp[e.u]);
    }
    std::vector<int> colour(parts, -1), group(parts, -1);
    int groups = 0;
    for (int s = 0; s < parts; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        group[s] = groups;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int d : cadj[c]) {
                if (colour[d] < 0) {
                    colour[d] = colour[c] ^ 1;
                    group[d] = groups;
                    stack.push_back(d);
                } else if (colour[d] == colour[c]) {
                    return std::nullopt;
                }
            }
        }
        ++groups;
    }

    // which components contain a circuit
    const int n = g.order();
    std::vector<int> csize(parts, 0), cedges(parts, 0);
    for (int v = 0; v < n; ++v) ++csize[comp[v]];
    for (Edge e : g.edges()) {
        if (comp[e.u] != comp[e.v]) continue;
        if (std::find(cut.begin(), cut.end(), e) != cut.end()) continue;
        ++cedges[comp[e.u]];
    }
    std::vector<std::array<char, 2>> gc(groups, {0, 0});
    for (int c = 0; c < parts; ++c)
        if (cedges[c] >= csize[c]) gc[group[c]][colour[c]] = 1;

    // orient the groups so both sides of the bipartition get a circuit
    std::vector<char> flip(groups, 0);
    bool some_both = false;
    for (int j = 0; j < groups; ++j) some_both = some_both || (gc[j][0] && gc[j][1]);
    if (!some_both) {
        std::vector<int> circ_groups;
        for (int j = 0; j < groups; ++j)
            if (gc[j][0] || gc[j][1]) circ_groups.push_back(j);
        if (circ_groups.size() < 2) return std::nullopt;
        bool s0 = false, s1 = false;
        for (int j : circ_groups) {
            s0 = s0 || gc[j][0];
            s1 = s1 || gc[j][1];
        }
        if (!s0 || !s1) flip[circ_groups[0]] = 1;
    }

    std::vector<int> side;
    for (int v = 0; v < n; ++v)
        if ((colour[comp[v]] ^ flip[group[comp[v]]]) == 0) side.push_back(v);
    EdgeCut out = edge_cut_between(g, side);
    std::vector<Edge> want(cut);
    std::sort(want.begin(), want.end());
    if (!out.cyclic || out.crossing != want) return std::nullopt;  // defensive
    return out;
}

// A cyclic 3-cut in a graph without 1- or 2-cuts has six distinct endpoints:
// two cut edges at one vertex would turn its third edge plus the remaining
// cut edge into a 2-cut.
void check_three_cut(const EdgeCut& cut) {
    if (cut.crossing.size() != 3) return;
    std::set<int> ends;
    for (Edge e : cut.crossing) {
        ends.insert(e.u);
        ends.insert(e.v);
    }
    if (ends.size() != 6) fail(errc::neighbors_collide, "cyclic 3-cut endpoints not distinct");
}

// Minimum edge cut separating two vertex-disjoint circuits: contract each to
// a terminal and run unit-capacity max-flow.
EdgeCut min_cut_between(const CubicGraph& g, const std::vector<int>& c1,
                        const std::vector<int>& c2) {
    const int n = g.order();
    std::vector<int> id(n, -1);
    for (int v : c1) id[v] = 0;
    for (int v : c2) id[v] = 1;
    int k = 2;
    for (int v = 0; v < n; ++v)
        if (id[v] < 0) id[v] = k++;
    std::vector<std::vector<int>> cap(k, std::vector<int>(k, 0));
    for (Edge e : g.edges()) {
        int a = id[e.u], b = id[e.v];
        if (a == b) continue;
        ++cap[a][b];
        ++cap[b][a];
    }
    while (true) {
        std::vector<int> par(k, -1);
        par[0] = 0;
        std::deque<int> q{0};
        while (!q.empty() && par[1] < 0) {
            int v = q.front();
            q.pop_front();
            for (int w = 0; w < k; ++w)
                if (par[w] < 0 && cap[v][w] > 0) {
                    par[w] = v;
                    q.push_back(w);
                }
        }
        if (par[1] < 0) break;
        int b = INT_MAX;
        for (int v = 1; v != 0; v = par[v]) b = std::min(b, cap[par[v]][v]);
        for (int v = 1; v != 0; v = par[v]) {
            cap[par[v]][v] -= b;
            cap[v][par[v]] += b;
        }
    }
    std::vector<char> reach(k, 0);
    reach[0] = 1;
    std::deque<int> q{0};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w = 0; w < k; ++w)
            if (!reach[w] && cap[v][w] > 0) {
                reach[w] = 1;
                q.push_back(w);
            }
    }
    std::vector<int> side;
    for (int v = 0; v < n; ++v)
        if (reach[id[v]]) side.push_back(v);
    return edge_cut_between(g, side);
}

bool better_cut(const EdgeCut& a, const EdgeCut& b) {
    if (a.crossing.size() != b.crossing.size()) return a.crossing.size() < b.crossing.size();
    return a.crossing < b.crossing;
}

// Minimum cyclic cut via max-flow over a pool of short circuits.  Used past
// the exhaustive budget; the pool holds a shortest circuit through every edge
// plus a disjoint companion for each when one exists.
std::optional<EdgeCut> flow_search(const CubicGraph& g, int max_size) {
    const int n = g.order();
    std::vector<std::vector<int>> pool;
    std::set<std::vector<int>> seen;
    auto add = [&](const std::vector<int>& verts) {
        Circuit c(verts);  // canonical rotation, so `seen` dedups properly
        if (seen.insert(c.vertices).second) pool.push_back(c.vertices);
    };
    for (Edge e : g.edges())
        if (auto c = shortest_circuit_through(g, e)) add(c->vertices);
    const size_t base = pool.size();
    for (size_t i = 0; i < base; ++i) {
        std::vector<char> keep(n, 1);
        for (int v : pool[i]) keep[v] = 0;
        if (auto c = any_circuit_in(g, keep)) add(*c);
    }
    std::optional<EdgeCut> best;
    std::vector<uint64_t> mask(pool.size(), 0);
    for (size_t i = 0; i < pool.size(); ++i)
        for (int v : pool[i]) mask[i] |= uint64_t(1) << v;
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) {
            if (mask[i] & mask[j]) continue;
            EdgeCut cut = min_cut_between(g, pool[i], pool[j]);
            if (!cut.cyclic) continue;
            if (!best || better_cut(cut, *best)) best = cut;
        }
    if (best && static_cast<int>(best->crossing.size()) <= max_size) {
        check_three_cut(*best);
        return best;
    }
    return std::nullopt;
}

uint64_t binom_capped(int n, int k, uint64_t cap) {
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

EdgeCut edge_cut_between(const CubicGraph& g, const std::vector<int>& side) {
    const int n = g.order();
    std::vector<char> in(n, 0);
    for (int v : side) {
        g.check_vertex(v);
        if (in[v]) fail(errc::bad_index, "duplicate vertex in cut side");
        in[v] = 1;
    }
    if (side.empty() || static_cast<int>(side.size()) == n)
        fail(errc::bad_size, "cut side must be a proper nonempty subset of the vertices");
    if (!in[0])
        for (int v = 0; v < n; ++v) in[v] ^= 1;
    EdgeCut out;
    for (int v = 0; v < n; ++v) (in[v] ? out.side_a : out.side_b).push_back(v);
    for (Edge e : g.edges())
        if (in[e.u] != in[e.v]) out.crossing.push_back(e);
    out.cyclic = side_has_circuit(g, in, 1) && side_has_circuit(g, in, 0);
    return out;
}

std::optional<EdgeCut> find_cyclic_edge_cut(const CubicGraph& g, int max_size) {
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    constexpr uint64_t kExhaustiveBudget = 4'000'000;
    const int cap = std::min(max_size, m - 1);
    for (int s = 1; s <= cap; ++s) {
        if (binom_capped(m, s, kExhaustiveBudget) > kExhaustiveBudget)
            return flow_search(g, cap);  // sizes below s are already ruled out
        std::vector<int> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<Edge> pick;
        while (true) {
            pick.clear();
            for (int i : idx) pick.push_back(edges[i]);
            if (auto cut = make_cyclic_cut(g, pick)) {
                check_three_cut(*cut);
                return cut;
            }
            int i = s - 1;
            while (i >= 0 && idx[i] == m - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

int cyclic_edge_connectivity(const CubicGraph& g) {
    if (!has_two_disjoint_circuits(g)) return g.size() - g.order() + 1;
    auto cut = find_cyclic_edge_cut(g, g.size());
    if (!cut) fail(errc::not_a_cyclic_cut, "no cyclic cut found despite two disjoint circuits");
    return static_cast<int>(cut->crossing.size());
}

bool has_two_disjoint_circuits(const CubicGraph& g) {
    const int n = g.order();
    for (Edge e : g.edges()) {
        auto c = shortest_circuit_through(g, e);
        if (!c) continue;
        std::vector<char> in(n, 1);
        for (int v : c->vertices) in[v] = 0;
        if (side_has_circuit(g, in, 1)) return true;
    }
    // exact fallback for the tiny graphs where no shortest circuit works
    auto all = enumerate_circuits(g);
    std::vector<uint64_t> masks;
    masks.reserve(all.size());
    for (const Circuit& c : all) {
        uint64_t msk = 0;
        for (int v : c.vertices) msk |= uint64_t(1) << v;
        masks.push_back(msk);
    }
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = i + 1; j < masks.size(); ++j)
            if (!(masks[i] & masks[j])) return true;
    return false;
}

bool is_bridgeless(const CubicGraph& g) {
    std::vector<int> comp;
    for (Edge e : g.edges())
        if (components_without(g, {e}, comp) > 1) return false;
    return true;
}

int girth(const CubicGraph& g) {
    const int n = g.order();
    int best = INT_MAX;
    for (int r = 0; r < n && best > 3; ++r) {
        std::vector<int> dist(n, -1), par(n, -1);
        dist[r] = 0;
        std::deque<int> q{r};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    q.push_back(w);
                } else if (w != par[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

std::optional<Circuit> shortest_circuit_through(const CubicGraph& g, Edge e) {
    g.check_edge(e);
    const int n = g.order();
    std::vector<int> par(n, -2);
    par[e.u] = -1;
    std::deque<int> q{e.u};
    while (!q.empty() && par[e.v] == -2) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
            if (par[w] != -2 || Edge(v, w) == e) continue;
            par[w] = v;
            q.push_back(w);
        }
    }
    if (par[e.v] == -2) return std::nullopt;  // bridge
    std::vector<int> verts;
    for (int x = e.v; x != -1; x = par[x]) verts.push_back(x);
    return Circuit(verts);
}

int edge_distance(const CubicGraph& g, Edge e, Edge f) {
    g.check_edge(e);
    g.check_edge(f);
    if (e == f) return 0;
    const auto edges = g.edges();
    auto index = [&](Edge x) {
        return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), x) - edges.begin());
    };
    std::vector<int> dist(edges.size(), -1);
    dist[index(e)] = 0;
    std::deque<int> q{index(e)};
    while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        Edge cur = edges[i];
        for (int end : {cur.u, cur.v})
            for (int w : g.neighbors(end)) {
                Edge nxt(end, w);
                if (nxt == cur) continue;
                int j = index(nxt);
                if (dist[j] >= 0) continue;
                dist[j] = dist[i] + 1;
                if (nxt == f) return dist[j];
                q.push_back(j);
            }
    }
    fail(errc::disconnected, "line graph search failed");
}

}  // namespace charm
