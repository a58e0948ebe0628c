#include "charm/canonical.hpp"

#include "charm/graph6.hpp"

namespace charm {

CubicGraph relabeled(const CubicGraph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) fail(errc::bad_index, "permutation size mismatch");
    std::vector<char> hit(n, 0);
    for (int p : perm) {
        if (p < 0 || p >= n || hit[p]) fail(errc::bad_index, "not a permutation");
        hit[p] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (Edge e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    return CubicGraph::from_edges(n, edges);
}

namespace {

// ordered partition as a flat vertex array plus cell boundaries
struct Partition {
    std::vector<int> verts;
    std::vector<int> cell_start;  // cell i = verts[cell_start[i] .. cell_start[i+1])

    int cells() const { return static_cast<int>(cell_start.size()) - 1; }
    int cell_size(int c) const { return cell_start[c + 1] - cell_start[c]; }
    bool discrete() const { return cells() == static_cast<int>(verts.size()); }
};

// equitable refinement: split cells by neighbor counts into each cell until stable
void refine(const CubicGraph& g, Partition& p) {
    const int n = g.order();
    std::vector<int> count(n);
    bool again = true;
    while (again) {
        again = false;
        for (int target = 0; target < p.cells() && !again; ++target) {
            std::fill(count.begin(), count.end(), 0);
            for (int k = p.cell_start[target]; k < p.cell_start[target + 1]; ++k)
                for (int w : g.neighbors(p.verts[k])) ++count[w];
            // split every cell by count value (ascending), preserving cell order
            Partition next;
            next.verts.reserve(n);
            next.cell_start.push_back(0);
            for (int c = 0; c < p.cells(); ++c) {
                for (int val = 0; val <= 3; ++val) {
                    int added = 0;
                    for (int k = p.cell_start[c]; k < p.cell_start[c + 1]; ++k)
                        if (count[p.verts[k]] == val) {
                            next.verts.push_back(p.verts[k]);
                            ++added;
                        }
                    if (added) next.cell_start.push_back(next.cell_start.back() + added);
                }
            }
            if (next.cells() != p.cells()) {
                p = std::move(next);
                again = true;  // restart scanning from the first cell
            }
        }
    }
}

struct CanonSearch {
    const CubicGraph* g;
    std::string best;  // smallest graph6 over discrete labelings reached

    void leaf(const Partition& p) {
        const int n = g->order();
        std::vector<int> perm(n);  // old -> new
        for (int i = 0; i < n; ++i) perm[p.verts[i]] = i;
        std::string cand = write_graph6(relabeled(*g, perm));
        if (best.empty() || cand < best) best = std::move(cand);
    }

    void search(Partition p) {
        refine(*g, p);
        if (p.discrete()) {
            leaf(p);
            return;
        }
        int target = 0;
        while (p.cell_size(target) == 1) ++target;
        const int ts = p.cell_start[target], te = p.cell_start[target + 1];
        for (int k = ts; k < te; ++k) {
            Partition child;
            child.verts = p.verts;
            std::swap(child.verts[ts], child.verts[k]);
            std::sort(child.verts.begin() + ts + 1, child.verts.begin() + te);
            child.cell_start.assign(p.cell_start.begin(), p.cell_start.begin() + target + 1);
            child.cell_start.push_back(ts + 1);
            child.cell_start.insert(child.cell_start.end(), p.cell_start.begin() + target + 1,
                                    p.cell_start.end());
            search(std::move(child));
        }
    }
};

}  // namespace

std::string canonical_form(const CubicGraph& g) {
    const int n = g.order();
    Partition unit;
    unit.verts.resize(n);
    for (int i = 0; i < n; ++i) unit.verts[i] = i;
    unit.cell_start = {0, n};
    CanonSearch s;
    s.g = &g;
    s.search(std::move(unit));
    return s.best;
}

bool is_isomorphic(const CubicGraph& a, const CubicGraph& b) {
    if (a.order() != b.order()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace charm
