#pragma once

#include <functional>
#include <optional>

#include "charm/graph.hpp"

namespace charm {

// all perfect matchings, lexicographic by construction order; with `through`
// restricted to those containing the edge (same set as filtering the full list)
std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g,
                                                         std::optional<Edge> through = {});

// every circuit of g exactly once, sorted canonically
std::vector<Circuit> enumerate_circuits(const CubicGraph& g);
std::vector<Circuit> triangles_of(const CubicGraph& g);
std::vector<Circuit> four_circuits_of(const CubicGraph& g);

// visit every nonempty set of pairwise vertex-disjoint circuits exactly once;
// visitor returning false stops the walk; max_count caps emissions
void for_each_disjoint_circuit_collection(const CubicGraph& g, std::optional<int> max_count,
                                          const std::function<bool(const CircuitCollection&)>& visit);
std::vector<CircuitCollection> enumerate_disjoint_circuit_collections(
    const CubicGraph& g, std::optional<int> max_count = {});

// circuit components of g minus the factor's edges
CircuitCollection circuits_from_one_plus_factor(const CubicGraph& g, const OnePlusFactor& f);

// first spanning circuit in deterministic search order, if any
std::optional<Circuit> hamiltonian_circuit(const CubicGraph& g);

// number of proper 3-edge-colourings, colours labeled
uint64_t count_edge_colourings(const CubicGraph& g);

}  // namespace charm
