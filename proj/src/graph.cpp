#include "charm/graph.hpp"

#include <numeric>
#include <string>

namespace charm {

std::string to_string(Edge e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

CubicGraph CubicGraph::from_adjacency(const std::vector<std::vector<int>>& lists) {
    const int n = static_cast<int>(lists.size());
    if (n < 4) fail(errc::not_cubic, "need at least 4 vertices, got " + std::to_string(n));
    if (n % 2 != 0) fail(errc::not_cubic, "odd vertex count " + std::to_string(n));
    std::vector<std::array<int, 3>> adj(n);
    for (int v = 0; v < n; ++v) {
        if (lists[v].size() != 3)
            fail(errc::not_cubic, "vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(lists[v].size()));
        std::array<int, 3> nb{lists[v][0], lists[v][1], lists[v][2]};
        std::sort(nb.begin(), nb.end());
        for (int w : nb) {
            if (w < 0 || w >= n)
                fail(errc::bad_index, "vertex " + std::to_string(v) + " lists neighbor " +
                                          std::to_string(w) + " outside 0.." + std::to_string(n - 1));
            if (w == v) fail(errc::not_simple, "loop at vertex " + std::to_string(v));
        }
        if (nb[0] == nb[1] || nb[1] == nb[2])
            fail(errc::not_simple, "parallel edge at vertex " + std::to_string(v));
        adj[v] = nb;
    }
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (!std::binary_search(adj[w].begin(), adj[w].end(), v))
                fail(errc::not_cubic, "asymmetric adjacency between " + std::to_string(v) +
                                          " and " + std::to_string(w));
    // connectivity
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) fail(errc::disconnected, "only " + std::to_string(reached) + " of " +
                                                   std::to_string(n) + " vertices reachable");
    return CubicGraph(std::move(adj));
}

CubicGraph CubicGraph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 4) fail(errc::not_cubic, "need at least 4 vertices, got " + std::to_string(n));
    std::vector<Edge> es = edges;
    std::sort(es.begin(), es.end());
    for (size_t i = 0; i + 1 < es.size(); ++i)
        if (es[i] == es[i + 1]) fail(errc::not_simple, "duplicate edge " + to_string(es[i]));
    std::vector<std::vector<int>> lists(n);
    for (Edge e : es) {
        if (e.u < 0 || e.v >= n) fail(errc::bad_index, "edge " + to_string(e) + " out of range");
        if (e.u == e.v) fail(errc::not_simple, "loop " + to_string(e));
        lists[e.u].push_back(e.v);
        lists[e.v].push_back(e.u);
    }
    return from_adjacency(lists);
}

const std::array<int, 3>& CubicGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

void CubicGraph::check_vertex(int v) const {
    if (v < 0 || v >= order())
        fail(errc::bad_index, "vertex " + std::to_string(v) + " outside 0.." +
                                  std::to_string(order() - 1));
}

bool CubicGraph::has_edge(int u, int v) const {
    if (u < 0 || u >= order() || v < 0 || v >= order()) return false;
    const auto& nb = adj_[u];
    return nb[0] == v || nb[1] == v || nb[2] == v;
}

void CubicGraph::check_edge(Edge e) const {
    if (!has_edge(e)) fail(errc::edge_not_in_graph, to_string(e));
}

int CubicGraph::third_neighbor(int v, int a, int b) const {
    check_vertex(v);
    for (int w : adj_[v])
        if (w != a && w != b) return w;
    fail(errc::bad_index, "no third neighbor of " + std::to_string(v));
}

std::vector<Edge> CubicGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (int v = 0; v < order(); ++v)
        for (int w : adj_[v])
            if (v < w) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
}

Circuit::Circuit(std::vector<int> cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 3) fail(errc::not_a_circuit, "length " + std::to_string(k) + " below 3");
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(errc::not_a_circuit, "repeated vertex");
    auto it = std::min_element(cycle.begin(), cycle.end());
    const int pos = static_cast<int>(it - cycle.begin());
    const int fwd = cycle[(pos + 1) % k];
    const int bwd = cycle[(pos + k - 1) % k];
    vertices.resize(k);
    if (fwd <= bwd)
        for (int i = 0; i < k; ++i) vertices[i] = cycle[(pos + i) % k];
    else
        for (int i = 0; i < k; ++i) vertices[i] = cycle[(pos + k - i) % k];
}

bool Circuit::has_vertex(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Circuit::has_edge(Edge e) const {
    const int k = length();
    for (int i = 0; i < k; ++i)
        if (Edge(vertices[i], vertices[(i + 1) % k]) == e) return true;
    return false;
}

std::vector<Edge> Circuit::edges() const {
    const int k = length();
    std::vector<Edge> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) out.emplace_back(vertices[i], vertices[(i + 1) % k]);
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t Circuit::vertex_mask() const {
    uint64_t m = 0;
    for (int v : vertices) m |= uint64_t(1) << v;
    return m;
}

bool is_perfect_matching(const CubicGraph& g, const PerfectMatching& m) {
    if (static_cast<int>(m.edges.size()) != g.order() / 2) return false;
    uint64_t covered = 0;
    for (Edge e : m.edges) {
        if (!g.has_edge(e)) return false;
        const uint64_t bits = (uint64_t(1) << e.u) | (uint64_t(1) << e.v);
        if (covered & bits) return false;
        covered |= bits;
    }
    return true;
}

void validate_circuit(const CubicGraph& g, const Circuit& c) {
    const int k = c.length();
    if (k < 3) fail(errc::not_a_circuit, "length below 3");
    for (int i = 0; i < k; ++i) {
        g.check_vertex(c.vertices[i]);
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % k]))
            fail(errc::not_a_circuit, "missing edge " +
                                          to_string(Edge(c.vertices[i], c.vertices[(i + 1) % k])));
    }
}

void validate_collection(const CubicGraph& g, const CircuitCollection& cc) {
    uint64_t used = 0;
    for (const Circuit& c : cc.circuits) {
        validate_circuit(g, c);
        const uint64_t m = c.vertex_mask();
        if (used & m) fail(errc::circuits_not_disjoint, "circuits share a vertex");
        used |= m;
    }
}

void validate_factor(const CubicGraph& g, const OnePlusFactor& f) {
    std::vector<int> deg(g.order(), 0);
    for (Edge e : f.edges) {
        g.check_edge(e);
        ++deg[e.u];
        ++deg[e.v];
    }
    for (int v = 0; v < g.order(); ++v)
        if (deg[v] == 0) fail(errc::invalid_factor, "vertex " + std::to_string(v) + " uncovered");
}

bool matching_hits(const PerfectMatching& m, const Circuit& c) {
    const int k = c.length();
    for (int i = 0; i < k; ++i)
        if (m.contains(Edge(c.vertices[i], c.vertices[(i + 1) % k]))) return true;
    return false;
}

bool matching_hits_all(const PerfectMatching& m, const CircuitCollection& cc) {
    for (const Circuit& c : cc.circuits)
        if (!matching_hits(m, c)) return false;
    return true;
}

Subgraph complement_subgraph(const CubicGraph& g, const std::vector<std::vector<Edge>>& removed) {
    std::vector<Edge> gone;
    for (const auto& set : removed)
        for (Edge e : set) {
            g.check_edge(e);
            gone.push_back(e);
        }
    std::sort(gone.begin(), gone.end());
    gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
    Subgraph s;
    s.n = g.order();
    s.adj.resize(s.n);
    for (Edge e : g.edges())
        if (!std::binary_search(gone.begin(), gone.end(), e)) {
            s.adj[e.u].push_back(e.v);
            s.adj[e.v].push_back(e.u);
        }
    return s;
}

namespace {

std::vector<int> component_of(const Subgraph& s) {
    std::vector<int> comp(s.n, -1);
    int label = 0;
    for (int v = 0; v < s.n; ++v) {
        if (comp[v] != -1) continue;
        comp[v] = label;
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : s.adj[x])
                if (comp[w] == -1) {
                    comp[w] = label;
                    stack.push_back(w);
                }
        }
        ++label;
    }
    return comp;
}

}  // namespace

bool is_acyclic(const Subgraph& s) {
    // forest iff every component has edges = vertices - 1
    auto comp = component_of(s);
    int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> verts(ncomp, 0), edge2(ncomp, 0);  // edge2 counts each edge twice
    for (int v = 0; v < s.n; ++v) {
        ++verts[comp[v]];
        edge2[comp[v]] += static_cast<int>(s.adj[v].size());
    }
    for (int c = 0; c < ncomp; ++c)
        if (edge2[c] / 2 >= verts[c]) return false;
    return true;
}

std::vector<int> component_orders(const Subgraph& s, bool ignore_isolated) {
    auto comp = component_of(s);
    int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> sizes(ncomp, 0);
    for (int v = 0; v < s.n; ++v) ++sizes[comp[v]];
    std::vector<int> out;
    for (int c = 0; c < ncomp; ++c)
        if (!(ignore_isolated && sizes[c] == 1)) out.push_back(sizes[c]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace charm
