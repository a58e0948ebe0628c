#include "charm/catalog.hpp"

#include <map>
#include <string>
#include <utility>

#include "charm/canonical.hpp"
#include "charm/error.hpp"
#include "charm/families.hpp"
#include "charm/graph6.hpp"

namespace charm {

namespace {

// subdivide two distinct edges and join the two subdivision vertices
CubicGraph insert_edge_pair(const CubicGraph& g, Edge e, Edge f) {
    int n = g.order();
    std::vector<Edge> es;
    es.reserve(g.size() + 3);
    for (Edge h : g.edges())
        if (h != e && h != f) es.push_back(h);
    es.push_back(Edge(e.u, n));
    es.push_back(Edge(e.v, n));
    es.push_back(Edge(f.u, n + 1));
    es.push_back(Edge(f.v, n + 1));
    es.push_back(Edge(n, n + 1));
    return CubicGraph::from_edges(n + 2, es);
}

// replace an edge by a diamond (K4 minus an edge) hung between its endpoints
CubicGraph insert_diamond(const CubicGraph& g, Edge e) {
    int n = g.order();
    int a = n, b = n + 1, c = n + 2, d = n + 3;
    std::vector<Edge> es;
    es.reserve(g.size() + 6);
    for (Edge h : g.edges())
        if (h != e) es.push_back(h);
    es.push_back(Edge(a, b));
    es.push_back(Edge(a, c));
    es.push_back(Edge(b, c));
    es.push_back(Edge(b, d));
    es.push_back(Edge(c, d));
    es.push_back(Edge(e.u, a));
    es.push_back(Edge(e.v, d));
    return CubicGraph::from_edges(n + 4, es);
}

// subdivide an edge and hang a subdivided K4 off the new vertex by a bridge
CubicGraph insert_lollipop(const CubicGraph& g, Edge e) {
    int n = g.order();
    int w = n, p = n + 1, q = n + 2, r = n + 3, o = n + 4, m = n + 5;
    std::vector<Edge> es;
    es.reserve(g.size() + 9);
    for (Edge h : g.edges())
        if (h != e) es.push_back(h);
    es.push_back(Edge(e.u, w));
    es.push_back(Edge(e.v, w));
    es.push_back(Edge(w, m));
    es.push_back(Edge(p, q));
    es.push_back(Edge(p, r));
    es.push_back(Edge(q, r));
    es.push_back(Edge(q, o));
    es.push_back(Edge(r, o));
    es.push_back(Edge(p, m));
    es.push_back(Edge(o, m));
    return CubicGraph::from_edges(n + 6, es);
}

CubicGraph k4() {
    return CubicGraph::from_edges(
        4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)});
}

}  // namespace

std::vector<CubicGraph> generate_cubic_catalog(int n_max) {
    if (n_max < 4 || n_max % 2 != 0) fail(errc::bad_size, "order bound must be even and >= 4");

    // every connected cubic graph on more than four vertices arises from a
    // smaller one by edge insertion, a triangle expansion, a diamond
    // insertion or a lollipop insertion, so closing the lower levels under
    // these and deduplicating canonically is exhaustive; the per-order class
    // counts are pinned in the tests against an independent enumeration
    std::map<int, std::map<std::string, CubicGraph>> levels;
    levels[4].emplace(canonical_form(k4()), k4());

    for (int n = 6; n <= n_max; n += 2) {
        auto& out = levels[n];
        auto add = [&](CubicGraph h) {
            std::string c = canonical_form(h);
            out.emplace(std::move(c), std::move(h));
        };
        if (levels.count(n - 2)) {
            for (const auto& [code, g] : levels[n - 2]) {
                auto es = g.edges();
                for (size_t a = 0; a < es.size(); ++a)
                    for (size_t b = a + 1; b < es.size(); ++b)
                        add(insert_edge_pair(g, es[a], es[b]));
                for (int v = 0; v < g.order(); ++v) add(expand_vertex(g, v));
            }
        }
        if (levels.count(n - 4))
            for (const auto& [code, g] : levels[n - 4])
                for (Edge e : g.edges()) add(insert_diamond(g, e));
        if (levels.count(n - 6))
            for (const auto& [code, g] : levels[n - 6])
                for (Edge e : g.edges()) add(insert_lollipop(g, e));
    }

    std::vector<CubicGraph> out;
    for (const auto& [n, level] : levels)
        if (n <= n_max)
            for (const auto& [code, g] : level) out.push_back(parse_graph6(code));
    return out;
}

}  // namespace charm
