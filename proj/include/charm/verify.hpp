#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charm/graph.hpp"
#include "charm/solver.hpp"

namespace charm {

enum class GraphStatus { verified, skipped_klee, skipped_connectivity, failed };
const char* graph_status_name(GraphStatus s);

struct GraphReport {
    std::string graph6;
    GraphStatus status = GraphStatus::verified;
    long long instances = 0;
    std::string failure;  // replayable edge and circuits of the failing instance
};

struct VerificationReport {
    int n_max = 0;
    bool exhaustive = true;
    uint64_t seed = 0;
    long long instances = 0;
    std::vector<GraphReport> graphs;
    int counted(GraphStatus s) const;
    bool ok() const { return counted(GraphStatus::failed) == 0; }
};

// instance-by-instance check of the witness theorem over the catalog: every
// graph that is cyclically 3-edge-connected and not Klee, every edge, every
// disjoint circuit collection.  Exhaustive up to order 12; larger graphs get
// a seed-deterministic sample (reservoir of 64 over the first 5000
// collections in enumeration order).  Parallel across graphs, never within
// one solve.
VerificationReport verify_theorem(const std::vector<CubicGraph>& catalog, int n_max,
                                  bool exhaustive, uint64_t seed, int jobs,
                                  const SolveConfig& config = {});

std::string report_text(const VerificationReport& r);

// serialization used by reports and the command line: "0,1,2;3,4,5"
std::string circuits_to_string(const CircuitCollection& cc);
CircuitCollection parse_circuits(const std::string& text);

// two perfect matchings whose removal leaves only paths on two or three
// vertices, found by exhaustive pair search
std::optional<std::pair<PerfectMatching, PerfectMatching>> verify_acyclic_plus(
    const CubicGraph& g);

// the Klee ladder prescription that no matching satisfies: the special edge
// lies in exactly one perfect matching, whose complement is the prescribed
// spanning circuit
struct CounterexampleDemo {
    CubicGraph graph;
    Edge special_edge;
    PerfectMatching matching;
    Circuit spanning_circuit;
    bool witness_exists = true;  // oracle outcome; false for every valid order
};
CounterexampleDemo demo_counterexample(int n);
std::string describe(const CounterexampleDemo& d);

}  // namespace charm
