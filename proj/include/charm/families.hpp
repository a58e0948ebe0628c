#pragma once

#include <array>
#include <random>
#include <vector>

#include "charm/graph.hpp"

namespace charm {

// replace v by a triangle: v keeps its first listed neighbor, the two fresh
// vertices n and n+1 take over the second and third
CubicGraph expand_vertex(const CubicGraph& g, int v);

// contract a triangle to a single vertex, always the last id of the result
struct TriangleContraction {
    CubicGraph graph;
    int new_vertex = 0;
    std::vector<int> to_old;  // new id -> old id (new_vertex -> -1)
    std::vector<int> to_new;  // old id -> new id (triangle vertices -> new_vertex)
};
TriangleContraction contract_triangle(const CubicGraph& g, const Circuit& triangle);

// Klee graphs: K4 and everything reachable from it by vertex expansions
bool is_klee(const CubicGraph& g);

// replaying the history from K4 rebuilds a graph isomorphic to the input
struct KleeCertificate {
    std::vector<int> expansion_history;  // vertex expanded at each stage
};
KleeCertificate klee_certificate(const CubicGraph& g);
CubicGraph replay_certificate(const KleeCertificate& cert);

// the proper 3-edge-colouring of a Klee graph (unique up to permutation),
// returned as its three classes in sorted order
std::array<PerfectMatching, 3> klee_coloring(const CubicGraph& g);

CubicGraph random_klee_graph(int n, std::mt19937& rng);

// the ladder-shaped families: Klee ladders and the three graphs obtained by
// stripping their apexes and re-closing the rails
enum class LadderKind { none, klee_ladder, ladder, moebius_ladder, quasi_ladder };
const char* ladder_kind_name(LadderKind kind);

struct LadderFamily {
    LadderKind kind = LadderKind::none;
    int k = 0;  // rung parameter; the member graph has 2k vertices
};

CubicGraph make_klee_ladder(int n);     // n even, >= 4
CubicGraph make_ladder(int n);          // n even, >= 8
CubicGraph make_moebius_ladder(int n);  // n even, >= 8
CubicGraph make_quasi_ladder(int n);    // n even, >= 8
CubicGraph make_family(LadderKind kind, int n);

// which of the four families g belongs to, decided by canonical comparison
LadderFamily classify_ladder_family(const CubicGraph& g);

// the lexicographically least edge lying in exactly one perfect matching
// whose complement is a spanning circuit
Edge klee_ladder_special_edge(const CubicGraph& g);

}  // namespace charm
