#include "charm/enumerate.hpp"

namespace charm {

namespace {

void matchings_rec(const CubicGraph& g, uint64_t covered, std::vector<Edge>& cur,
                   std::vector<PerfectMatching>& out) {
    const int n = g.order();
    int v = -1;
    for (int i = 0; i < n; ++i)
        if (!(covered >> i & 1)) {
            v = i;
            break;
        }
    if (v == -1) {
        out.emplace_back(cur);
        return;
    }
    for (int w : g.neighbors(v)) {
        if (covered >> w & 1) continue;
        cur.emplace_back(v, w);
        matchings_rec(g, covered | (uint64_t(1) << v) | (uint64_t(1) << w), cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g,
                                                         std::optional<Edge> through) {
    std::vector<PerfectMatching> out;
    std::vector<Edge> cur;
    uint64_t covered = 0;
    if (through) {
        g.check_edge(*through);
        cur.push_back(*through);
        covered = (uint64_t(1) << through->u) | (uint64_t(1) << through->v);
    }
    matchings_rec(g, covered, cur, out);
    return out;
}

namespace {

// circuits with s = minimum vertex; intermediate vertices > s, reversal killed
// by requiring first step below last step
void circuits_rec(const CubicGraph& g, int s, std::vector<int>& path, uint64_t used,
                  std::vector<Circuit>& out) {
    const int v = path.back();
    for (int w : g.neighbors(v)) {
        if (w == s && path.size() >= 3 && path[1] < v) out.emplace_back(path);
        if (w <= s || (used >> w & 1)) continue;
        path.push_back(w);
        circuits_rec(g, s, path, used | (uint64_t(1) << w), out);
        path.pop_back();
    }
}

}  // namespace

std::vector<Circuit> enumerate_circuits(const CubicGraph& g) {
    std::vector<Circuit> out;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> path{s};
        circuits_rec(g, s, path, uint64_t(1) << s, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Circuit> triangles_of(const CubicGraph& g) {
    std::vector<Circuit> out;
    for (int v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (v < nb[i] && v < nb[j] && g.has_edge(nb[i], nb[j]))
                    out.emplace_back(std::vector<int>{v, nb[i], nb[j]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Circuit> four_circuits_of(const CubicGraph& g) {
    std::vector<Circuit> out;
    for (int a = 0; a < g.order(); ++a) {
        const auto& nb = g.neighbors(a);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const int b = nb[i], d = nb[j];
                if (b < a || d < a) continue;
                for (int c : g.neighbors(b))
                    if (c > a && c != d && g.has_edge(c, d))
                        out.emplace_back(std::vector<int>{a, b, c, d});
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct CollectionWalk {
    const std::vector<Circuit>* circuits;
    std::vector<uint64_t> masks;
    const std::function<bool(const CircuitCollection&)>* visit;
    long remaining = -1;  // -1 = unlimited
    std::vector<Circuit> chosen;
    bool stopped = false;

    void rec(size_t start, uint64_t used) {
        if (stopped) return;
        for (size_t j = start; j < circuits->size(); ++j) {
            if (masks[j] & used) continue;
            chosen.push_back((*circuits)[j]);
            if (remaining == 0 || !(*visit)(CircuitCollection(chosen))) {
                stopped = true;
            } else {
                if (remaining > 0) --remaining;
                if (remaining == 0) stopped = true;
                rec(j + 1, used | masks[j]);
            }
            chosen.pop_back();
            if (stopped) return;
        }
    }
};

}  // namespace

void for_each_disjoint_circuit_collection(
    const CubicGraph& g, std::optional<int> max_count,
    const std::function<bool(const CircuitCollection&)>& visit) {
    if (max_count && *max_count <= 0) return;
    auto circuits = enumerate_circuits(g);
    CollectionWalk walk;
    walk.circuits = &circuits;
    walk.masks.reserve(circuits.size());
    for (const Circuit& c : circuits) walk.masks.push_back(c.vertex_mask());
    walk.visit = &visit;
    walk.remaining = max_count ? *max_count : -1;
    walk.rec(0, 0);
}

std::vector<CircuitCollection> enumerate_disjoint_circuit_collections(
    const CubicGraph& g, std::optional<int> max_count) {
    std::vector<CircuitCollection> out;
    for_each_disjoint_circuit_collection(g, max_count, [&](const CircuitCollection& cc) {
        out.push_back(cc);
        return true;
    });
    return out;
}

CircuitCollection circuits_from_one_plus_factor(const CubicGraph& g, const OnePlusFactor& f) {
    validate_factor(g, f);
    Subgraph s = complement_subgraph(g, {f.edges});
    std::vector<char> seen(s.n, 0);
    std::vector<Circuit> found;
    for (int v = 0; v < s.n; ++v) {
        if (seen[v]) continue;
        // walk the component; collect it and check 2-regularity
        std::vector<int> comp;
        std::vector<int> stack{v};
        seen[v] = 1;
        bool all_deg2 = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            if (s.adj[x].size() != 2) all_deg2 = false;
            for (int w : s.adj[x])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (!all_deg2 || comp.size() < 3) continue;
        // trace the cycle in order
        std::vector<int> cyc{comp.front()};
        int prev = -1, cur = comp.front();
        while (true) {
            int nxt = (s.adj[cur][0] != prev) ? s.adj[cur][0] : s.adj[cur][1];
            if (nxt == comp.front()) break;
            cyc.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        found.emplace_back(std::move(cyc));
    }
    return CircuitCollection(std::move(found));
}

namespace {

bool ham_rec(const CubicGraph& g, std::vector<int>& path, uint64_t used) {
    const int n = g.order();
    const int v = path.back();
    if (static_cast<int>(path.size()) == n) return g.has_edge(v, path.front());
    for (int w : g.neighbors(v)) {
        if (used >> w & 1) continue;
        path.push_back(w);
        if (ham_rec(g, path, used | (uint64_t(1) << w))) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Circuit> hamiltonian_circuit(const CubicGraph& g) {
    std::vector<int> path{0};
    if (!ham_rec(g, path, 1)) return std::nullopt;
    return Circuit(path);
}

uint64_t count_edge_colourings(const CubicGraph& g) {
    std::vector<Edge> es = g.edges();
    std::vector<int> used(g.order(), 0);  // bitmask of colours present at each vertex
    uint64_t count = 0;
    std::function<void(size_t)> go = [&](size_t k) {
        if (k == es.size()) {
            ++count;
            return;
        }
        Edge e = es[k];
        for (int c = 0; c < 3; ++c) {
            const int bit = 1 << c;
            if ((used[e.u] | used[e.v]) & bit) continue;
            used[e.u] |= bit;
            used[e.v] |= bit;
            go(k + 1);
            used[e.u] &= ~bit;
            used[e.v] &= ~bit;
        }
    };
    go(0);
    return count;
}

}  // namespace charm
