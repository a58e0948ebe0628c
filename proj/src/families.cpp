#include "charm/families.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "charm/canonical.hpp"
#include "charm/enumerate.hpp"

namespace charm {
namespace {

CubicGraph make_k4() {
    return CubicGraph::from_edges(
        4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)});
}

// first triangle that contracts to a simple graph, in canonical order
std::optional<TriangleContraction> contract_any_triangle(const CubicGraph& g) {
    for (const Circuit& t : triangles_of(g)) {
        try {
            return contract_triangle(g, t);
        } catch (const error& e) {
            if (e.code() != errc::contraction_not_simple) throw;
        }
    }
    return std::nullopt;
}

// triangle vertices of a contraction, in increasing order
std::array<int, 3> contracted_triangle(const TriangleContraction& tc) {
    std::array<int, 3> t{};
    int k = 0;
    for (int u = 0; u < static_cast<int>(tc.to_new.size()); ++u)
        if (tc.to_new[u] == tc.new_vertex) t[k++] = u;
    return t;
}

}  // namespace

CubicGraph expand_vertex(const CubicGraph& g, int v) {
    g.check_vertex(v);
    const int n = g.order();
    std::array<int, 3> nb = g.neighbors(v);
    std::vector<Edge> es;
    for (Edge e : g.edges()) {
        if (e == Edge(v, nb[1]) || e == Edge(v, nb[2])) continue;
        es.push_back(e);
    }
    es.emplace_back(n, nb[1]);
    es.emplace_back(n + 1, nb[2]);
    es.emplace_back(v, n);
    es.emplace_back(v, n + 1);
    es.emplace_back(n, n + 1);
    return CubicGraph::from_edges(n + 2, es);
}

TriangleContraction contract_triangle(const CubicGraph& g, const Circuit& triangle) {
    if (triangle.length() != 3) fail(errc::not_a_triangle, "circuit does not have length 3");
    const int a = triangle.vertices[0], b = triangle.vertices[1], c = triangle.vertices[2];
    for (int v : {a, b, c}) g.check_vertex(v);
    if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c))
        fail(errc::not_a_triangle, "vertices are not pairwise adjacent");
    if (g.order() < 6) fail(errc::bad_size, "contraction would leave fewer than 4 vertices");

    const int oa = g.third_neighbor(a, b, c);
    const int ob = g.third_neighbor(b, a, c);
    const int oc = g.third_neighbor(c, a, b);
    if (oa == ob || ob == oc || oa == oc)
        fail(errc::contraction_not_simple, "outside neighbors of the triangle collide");

    TriangleContraction out;
    const int n = g.order();
    out.new_vertex = n - 3;
    out.to_new.assign(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (v == a || v == b || v == c) continue;
        out.to_new[v] = next++;
        out.to_old.push_back(v);
    }
    for (int v : {a, b, c}) out.to_new[v] = out.new_vertex;
    out.to_old.push_back(-1);

    std::vector<Edge> es;
    for (Edge e : g.edges()) {
        int mu = out.to_new[e.u], mv = out.to_new[e.v];
        if (mu == mv) continue;  // a triangle edge
        es.emplace_back(mu, mv);
    }
    out.graph = CubicGraph::from_edges(n - 2, es);
    return out;
}

bool is_klee(const CubicGraph& g) {
    CubicGraph cur = g;
    while (cur.order() > 4) {
        auto tc = contract_any_triangle(cur);
        if (!tc) return false;
        cur = tc->graph;
    }
    return true;
}

KleeCertificate klee_certificate(const CubicGraph& g) {
    std::vector<TriangleContraction> steps;
    CubicGraph cur = g;
    while (cur.order() > 4) {
        auto tc = contract_any_triangle(cur);
        if (!tc) fail(errc::not_klee, "graph has no contractible triangle");
        steps.push_back(std::move(*tc));
        cur = steps.back().graph;
    }

    // replay forward, carrying an isomorphism psi from the contraction-level
    // labels onto the rebuilt graph so each expansion lands on the image of
    // the contracted vertex
    CubicGraph h = make_k4();
    std::vector<int> psi{0, 1, 2, 3};
    KleeCertificate cert;
    for (int j = static_cast<int>(steps.size()) - 1; j >= 0; --j) {
        const TriangleContraction& tc = steps[j];
        const CubicGraph& big = (j == 0) ? g : steps[j - 1].graph;
        const int w = psi[tc.new_vertex];
        cert.expansion_history.push_back(w);

        std::array<int, 3> wn = h.neighbors(w);
        const int m = h.order();
        h = expand_vertex(h, w);  // w keeps wn[0]; m takes wn[1]; m+1 takes wn[2]

        std::vector<int> next(big.order(), -1);
        for (int u = 0; u < big.order(); ++u)
            if (tc.to_new[u] != tc.new_vertex) next[u] = psi[tc.to_new[u]];
        std::array<int, 3> tri = contracted_triangle(tc);
        for (int k = 0; k < 3; ++k) {
            int u = tri[k];
            int o = big.third_neighbor(u, tri[(k + 1) % 3], tri[(k + 2) % 3]);
            int ho = next[o];
            if (ho == wn[0])
                next[u] = w;
            else if (ho == wn[1])
                next[u] = m;
            else
                next[u] = m + 1;
        }
        psi = std::move(next);
    }
    return cert;
}

CubicGraph replay_certificate(const KleeCertificate& cert) {
    CubicGraph h = make_k4();
    for (int w : cert.expansion_history) h = expand_vertex(h, w);
    return h;
}

std::array<PerfectMatching, 3> klee_coloring(const CubicGraph& g) {
    std::array<std::vector<Edge>, 3> classes;
    if (g.order() == 4) {
        classes[0] = {Edge(0, 1), Edge(2, 3)};
        classes[1] = {Edge(0, 2), Edge(1, 3)};
        classes[2] = {Edge(0, 3), Edge(1, 2)};
    } else {
        auto tc = contract_any_triangle(g);
        if (!tc) fail(errc::not_klee, "graph has no contractible triangle");
        std::array<PerfectMatching, 3> sub = klee_coloring(tc->graph);
        std::map<Edge, int> col;
        for (int c = 0; c < 3; ++c)
            for (Edge e : sub[c].edges) col[e] = c;

        std::array<int, 3> tri = contracted_triangle(*tc);
        for (Edge e : g.edges()) {
            int mu = tc->to_new[e.u], mv = tc->to_new[e.v];
            if (mu != mv) {
                classes[col.at(Edge(mu, mv))].push_back(e);
                continue;
            }
            // the triangle edge opposite x inherits the colour of x's
            // boundary edge
            int x = -1;
            for (int u : tri)
                if (!e.incident(u)) x = u;
            int k = x == tri[0] ? 0 : (x == tri[1] ? 1 : 2);
            int o = g.third_neighbor(x, tri[(k + 1) % 3], tri[(k + 2) % 3]);
            classes[col.at(Edge(tc->new_vertex, tc->to_new[o]))].push_back(e);
        }
    }
    std::array<PerfectMatching, 3> out{PerfectMatching(std::move(classes[0])),
                                       PerfectMatching(std::move(classes[1])),
                                       PerfectMatching(std::move(classes[2]))};
    std::sort(out.begin(), out.end(),
              [](const PerfectMatching& a, const PerfectMatching& b) { return a.edges < b.edges; });
    return out;
}

CubicGraph random_klee_graph(int n, std::mt19937& rng) {
    if (n < 4 || n % 2 != 0) fail(errc::bad_size, "order must be even and at least 4");
    CubicGraph g = make_k4();
    while (g.order() < n) {
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        g = expand_vertex(g, pick(rng));
    }
    return g;
}

const char* ladder_kind_name(LadderKind kind) {
    switch (kind) {
        case LadderKind::klee_ladder: return "klee_ladder";
        case LadderKind::ladder: return "ladder";
        case LadderKind::moebius_ladder: return "moebius_ladder";
        case LadderKind::quasi_ladder: return "quasi_ladder";
        default: return "none";
    }
}

CubicGraph make_klee_ladder(int n) {
    if (n < 4 || n % 2 != 0) fail(errc::bad_size, "order must be even and at least 4");
    const int k = n / 2;
    std::vector<Edge> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(2 * i, 2 * i + 1);
    for (int i = 0; i + 2 < k; ++i) {
        es.emplace_back(2 * i, 2 * i + 2);
        es.emplace_back(2 * i + 1, 2 * i + 3);
    }
    es.emplace_back(2 * k - 2, 0);
    es.emplace_back(2 * k - 2, 1);
    es.emplace_back(2 * k - 1, 2 * k - 4);
    es.emplace_back(2 * k - 1, 2 * k - 3);
    es.emplace_back(2 * k - 2, 2 * k - 1);
    return CubicGraph::from_edges(n, es);
}

namespace {

// shared rail-and-rung core of the apexless families: the last four vertices
// are u'_1 = 2k-4, u'_2 = 2k-3, v'_1 = 2k-2, v'_2 = 2k-1
std::vector<Edge> ladder_core(int n) {
    if (n < 8 || n % 2 != 0) fail(errc::bad_size, "order must be even and at least 8");
    const int k = n / 2;
    std::vector<Edge> es;
    for (int i = 0; i + 2 < k; ++i) es.emplace_back(2 * i, 2 * i + 1);
    for (int i = 0; i + 3 < k; ++i) {
        es.emplace_back(2 * i, 2 * i + 2);
        es.emplace_back(2 * i + 1, 2 * i + 3);
    }
    es.emplace_back(2 * k - 4, 0);
    es.emplace_back(2 * k - 3, 1);
    es.emplace_back(2 * k - 2, 2 * k - 6);
    es.emplace_back(2 * k - 1, 2 * k - 5);
    return es;
}

}  // namespace

CubicGraph make_ladder(int n) {
    std::vector<Edge> es = ladder_core(n);
    const int k = n / 2;
    es.emplace_back(2 * k - 4, 2 * k - 3);
    es.emplace_back(2 * k - 2, 2 * k - 1);
    es.emplace_back(2 * k - 4, 2 * k - 2);
    es.emplace_back(2 * k - 3, 2 * k - 1);
    return CubicGraph::from_edges(n, es);
}

CubicGraph make_moebius_ladder(int n) {
    std::vector<Edge> es = ladder_core(n);
    const int k = n / 2;
    es.emplace_back(2 * k - 4, 2 * k - 3);
    es.emplace_back(2 * k - 2, 2 * k - 1);
    es.emplace_back(2 * k - 4, 2 * k - 1);
    es.emplace_back(2 * k - 3, 2 * k - 2);
    return CubicGraph::from_edges(n, es);
}

CubicGraph make_quasi_ladder(int n) {
    std::vector<Edge> es = ladder_core(n);
    const int k = n / 2;
    es.emplace_back(2 * k - 4, 2 * k - 2);
    es.emplace_back(2 * k - 4, 2 * k - 1);
    es.emplace_back(2 * k - 3, 2 * k - 2);
    es.emplace_back(2 * k - 3, 2 * k - 1);
    return CubicGraph::from_edges(n, es);
}

CubicGraph make_family(LadderKind kind, int n) {
    switch (kind) {
        case LadderKind::klee_ladder: return make_klee_ladder(n);
        case LadderKind::ladder: return make_ladder(n);
        case LadderKind::moebius_ladder: return make_moebius_ladder(n);
        case LadderKind::quasi_ladder: return make_quasi_ladder(n);
        default: fail(errc::bad_index, "no constructible family kind");
    }
}

LadderFamily classify_ladder_family(const CubicGraph& g) {
    LadderFamily out;
    out.k = g.order() / 2;
    const std::string cf = canonical_form(g);
    auto matches = [&](LadderKind kind) {
        return cf == canonical_form(make_family(kind, g.order()));
    };
    if (matches(LadderKind::klee_ladder)) {
        out.kind = LadderKind::klee_ladder;
    } else if (g.order() >= 8) {
        for (LadderKind kind :
             {LadderKind::ladder, LadderKind::moebius_ladder, LadderKind::quasi_ladder})
            if (matches(kind)) {
                out.kind = kind;
                break;
            }
    }
    return out;
}

Edge klee_ladder_special_edge(const CubicGraph& g) {
    if (classify_ladder_family(g).kind != LadderKind::klee_ladder)
        fail(errc::not_klee_ladder, "graph is not a Klee ladder");
    for (Edge e : g.edges()) {
        std::vector<PerfectMatching> ms = enumerate_perfect_matchings(g, e);
        if (ms.size() != 1) continue;
        CircuitCollection cc = circuits_from_one_plus_factor(g, OnePlusFactor(ms[0].edges));
        if (cc.count() == 1 && cc.circuits[0].length() == g.order()) return e;
    }
    fail(errc::not_klee_ladder, "no edge with a unique spanning-circuit matching");
}

}  // namespace charm
