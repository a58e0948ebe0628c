#pragma once

#include <optional>
#include <vector>

#include "charm/graph.hpp"

namespace charm {

// A bipartition (side_a, side_b) of the vertices together with the crossing
// edges E(side_a, side_b).  cyclic is true when both induced sides contain a
// circuit.  side_a always holds vertex 0; both sides and the crossing set are
// sorted.
struct EdgeCut {
    std::vector<int> side_a;
    std::vector<int> side_b;
    std::vector<Edge> crossing;
    bool cyclic = false;
};

// Builds the cut determined by an explicit side.  The side must be a proper
// nonempty subset of the vertices.
EdgeCut edge_cut_between(const CubicGraph& g, const std::vector<int>& side);

// Smallest cyclic edge cut of size <= max_size, or nullopt if none exists.
// Ties among minimum cuts are broken by the lexicographically smallest
// crossing edge set.  Searches sizes in increasing order, so a size-k result
// certifies that no cyclic cut of size < k exists.
std::optional<EdgeCut> find_cyclic_edge_cut(const CubicGraph& g, int max_size);

// Smallest size of a cyclic edge cut; |E| - |V| + 1 when the graph has no two
// vertex-disjoint circuits (K4 and K3,3 are the only such cubic graphs).
int cyclic_edge_connectivity(const CubicGraph& g);

bool has_two_disjoint_circuits(const CubicGraph& g);

bool is_bridgeless(const CubicGraph& g);

// Length of a shortest circuit.
int girth(const CubicGraph& g);

// Shortest circuit through the given edge, or nullopt when the edge is a
// bridge.
std::optional<Circuit> shortest_circuit_through(const CubicGraph& g, Edge e);

// Distance between two edges in the line graph: 0 iff e == f, 1 iff they
// share an endpoint.
int edge_distance(const CubicGraph& g, Edge e, Edge f);

}  // namespace charm
