#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charm/graph.hpp"

namespace charm {

struct SolveConfig {
    int brute_force_threshold = 16;  // instances this small go straight to the oracle
    int max_backtracks = 200;        // failed-candidate budget across one solve
    bool enable_distance2_reductions = true;
};

struct ReductionStep {
    std::string rule;
    std::string detail;
    bool operator==(const ReductionStep&) const = default;
};

struct CharmResult {
    PerfectMatching matching;
    std::vector<ReductionStep> trace;
    bool used_oracle_fallback = false;
};

// exhaustive reference: first perfect matching through e meeting every
// circuit, in enumeration order; none when the instance is infeasible
std::optional<PerfectMatching> oracle_charm(const CubicGraph& g, Edge e,
                                            const CircuitCollection& circuits);

// perfect matching through e meeting every prescribed circuit, found by
// cut/circuit surgery with verification and backtracking; requires a
// cyclically 3-edge-connected non-Klee graph
CharmResult charm_matching(const CubicGraph& g, Edge e, const CircuitCollection& circuits,
                           const SolveConfig& config = {});

// no prescribed edge; Klee inputs are served by their colour classes
PerfectMatching charm_matching_any(const CubicGraph& g, const CircuitCollection& circuits,
                                   const SolveConfig& config = {});

// perfect matching through e leaving g minus (factor union matching) acyclic
PerfectMatching acyclic_complement(const CubicGraph& g, const OnePlusFactor& factor, Edge e,
                                   const SolveConfig& config = {});

// second matching making g minus (m1 union m2) acyclic
PerfectMatching second_matching(const CubicGraph& g, const PerfectMatching& m1,
                                const SolveConfig& config = {});

// the full witness predicate: perfect, contains e, meets every circuit
bool charm_witness_ok(const CubicGraph& g, Edge e, const CircuitCollection& circuits,
                      const PerfectMatching& m);

}  // namespace charm
