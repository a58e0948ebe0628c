#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "charm/error.hpp"

namespace charm {

// undirected edge stored with u < v
struct Edge {
    int u = 0, v = 0;
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    bool incident(int w) const { return w == u || w == v; }
    int other(int w) const { return w == u ? v : u; }
    auto operator<=>(const Edge&) const = default;
};

std::string to_string(Edge e);

// simple connected 3-regular graph on vertices 0..n-1, immutable after construction
class CubicGraph {
public:
    CubicGraph() = default;  // empty placeholder, to be assigned
    // lists[v] = neighbors of v; validates degree, simplicity, symmetry, connectivity
    static CubicGraph from_adjacency(const std::vector<std::vector<int>>& lists);
    static CubicGraph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return 3 * order() / 2; }
    const std::array<int, 3>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
    // the neighbor of v distinct from a and b (v must be adjacent to both)
    int third_neighbor(int v, int a, int b) const;
    std::vector<Edge> edges() const;  // sorted, size() entries
    void check_vertex(int v) const;
    void check_edge(Edge e) const;  // throws edge_not_in_graph
    bool operator==(const CubicGraph&) const = default;

private:
    explicit CubicGraph(std::vector<std::array<int, 3>> adj) : adj_(std::move(adj)) {}
    std::vector<std::array<int, 3>> adj_;
};

struct PerfectMatching {
    std::vector<Edge> edges;  // kept sorted
    PerfectMatching() = default;
    explicit PerfectMatching(std::vector<Edge> es) : edges(std::move(es)) {
        std::sort(edges.begin(), edges.end());
    }
    bool contains(Edge e) const { return std::binary_search(edges.begin(), edges.end(), e); }
    bool operator==(const PerfectMatching&) const = default;
};

// circuit = simple cycle, stored in canonical rotation: smallest vertex first,
// direction chosen so the second vertex is the smaller of its two cycle-neighbors
struct Circuit {
    std::vector<int> vertices;
    Circuit() = default;
    explicit Circuit(std::vector<int> cycle);
    int length() const { return static_cast<int>(vertices.size()); }
    bool has_vertex(int v) const;
    bool has_edge(Edge e) const;
    std::vector<Edge> edges() const;
    uint64_t vertex_mask() const;
    auto operator<=>(const Circuit&) const = default;
};

struct CircuitCollection {
    std::vector<Circuit> circuits;  // kept sorted for deterministic identity
    CircuitCollection() = default;
    explicit CircuitCollection(std::vector<Circuit> cs) : circuits(std::move(cs)) {
        std::sort(circuits.begin(), circuits.end());
    }
    int count() const { return static_cast<int>(circuits.size()); }
    bool empty() const { return circuits.empty(); }
    bool operator==(const CircuitCollection&) const = default;
};

// spanning subgraph whose components are paths/circuits/cubic pieces: every vertex covered
struct OnePlusFactor {
    std::vector<Edge> edges;
    OnePlusFactor() = default;
    explicit OnePlusFactor(std::vector<Edge> es) : edges(std::move(es)) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
};

bool is_perfect_matching(const CubicGraph& g, const PerfectMatching& m);
void validate_circuit(const CubicGraph& g, const Circuit& c);              // throws not_a_circuit
void validate_collection(const CubicGraph& g, const CircuitCollection& cc); // throws circuits_not_disjoint
void validate_factor(const CubicGraph& g, const OnePlusFactor& f);          // throws invalid_factor
bool matching_hits(const PerfectMatching& m, const Circuit& c);
bool matching_hits_all(const PerfectMatching& m, const CircuitCollection& cc);

// leftover graph after deleting edge sets from g; vertex set unchanged
struct Subgraph {
    int n = 0;
    std::vector<std::vector<int>> adj;
};

Subgraph complement_subgraph(const CubicGraph& g, const std::vector<std::vector<Edge>>& removed);
bool is_acyclic(const Subgraph& s);
// sorted component sizes; ignore_isolated drops order-1 components
std::vector<int> component_orders(const Subgraph& s, bool ignore_isolated = false);

}  // namespace charm
