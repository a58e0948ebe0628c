#pragma once

#include <array>
#include <utility>
#include <vector>

#include "charm/connectivity.hpp"
#include "charm/graph.hpp"

namespace charm {

// ---------------------------------------------------------------------------
// Cyclic 3-cut split: delete the three crossing edges f_i = v'_i v''_i and
// join each side's endpoints to a fresh hub vertex (v' resp. v'').
// ---------------------------------------------------------------------------
struct ThreeCutSplit {
    CubicGraph g_prime;
    CubicGraph g_dprime;
    int v_prime = 0;    // hub id in g_prime (always the last vertex)
    int v_dprime = 0;   // hub id in g_dprime
    std::array<Edge, 3> cut{};       // f_1, f_2, f_3 in the original graph
    std::array<Edge, 3> e_prime{};   // e'_i = image of f_i at the g_prime hub
    std::array<Edge, 3> e_dprime{};  // e''_i at the g_dprime hub
    std::vector<int> prime_to_old;   // new id -> old id (hub -> -1)
    std::vector<int> dprime_to_old;
    std::vector<int> old_to_prime;   // old id -> new id (-1 when on other side)
    std::vector<int> old_to_dprime;
};

ThreeCutSplit split_on_3cut(const CubicGraph& g, const EdgeCut& cut);

// M = m' u m'' u {f_i} minus the two hub edges e'_i, e''_i.  Both side
// matchings must cover their hub through the index-i edge.
PerfectMatching lift_matching_3cut(const ThreeCutSplit& split, const PerfectMatching& m_prime,
                                   const PerfectMatching& m_dprime, int shared_index);

// Routes every circuit to its side; the at-most-one crossing circuit is
// closed through the hub on both sides.
std::pair<CircuitCollection, CircuitCollection> rewrite_circuits_3cut(
    const ThreeCutSplit& split, const CircuitCollection& circuits);

// ---------------------------------------------------------------------------
// The 4-circuit / cyclic 4-cut surgery: remove one side of the four boundary
// edges f_p = outer_p inner_p and add two adjacent vertices x, y with
// x ~ {outer_1, outer_i} and y adjacent to the other two outer vertices.
// ---------------------------------------------------------------------------
struct G1i {
    CubicGraph graph;
    int x = 0;
    int y = 0;
    int i = 0;                 // 2, 3 or 4: x is attached to outer_1 and outer_i
    bool from_circuit = false;  // built from a 4-circuit rather than a 4-cut
    std::array<int, 4> outer{};      // v'_1..v'_4 (old ids, kept side)
    std::array<int, 4> inner{};      // v''_1..v''_4 (old ids, removed side)
    std::array<Edge, 4> boundary{};  // f_1..f_4 in the original graph
    std::array<Edge, 4> attach{};    // images of f_1..f_4 at x / y in graph
    std::vector<int> to_old;         // new id -> old id (x, y -> -1)
    std::vector<int> to_new;         // old id -> new id (-1 when removed)
};

// 4-circuit form: c lists v''_1..v''_4 in circuit order; the kept side is
// everything off the circuit.
G1i build_g1i(const CubicGraph& g, const std::array<int, 4>& four_circuit, int i);

// Pure 4-cut form: one G1i per side, boundary edges taken in crossing order.
std::pair<G1i, G1i> build_g1i(const CubicGraph& g, const EdgeCut& cut, int i);

// Rewrites a collection onto the reduced side.  Crossing circuits are closed
// through x / y (and the edge xy when they attach to both); circuits whose
// closure collides with one already routed are dropped, as is the reduced
// 4-circuit itself.  dropped lists the input indices left out.
struct G1iRewrite {
    CircuitCollection circuits;
    std::vector<int> dropped;
    bool uses_xy = false;
};
G1iRewrite rewrite_circuits_g1i(const G1i& side, const CircuitCollection& circuits);

// Lifts a matching of a 4-circuit reduction back to the original graph.  A
// matching through xy lifts in two ways (symmetric difference the 4-circuit);
// otherwise the lift is unique.  Results are returned unverified.
std::vector<PerfectMatching> extend_matching_4circuit(const G1i& side, const PerfectMatching& m);

// Combines side matchings of a pure 4-cut: both through the xy edges, or
// both using the same pair of boundary indices.
PerfectMatching combine_matchings_4cut(const G1i& prime, const G1i& dprime,
                                       const PerfectMatching& m_prime,
                                       const PerfectMatching& m_dprime);

// Which boundary indices (0-based into attach) a side matching uses, and
// whether it contains the xy edge instead.
struct BoundaryUse {
    bool xy = false;
    std::vector<int> indices;
};
BoundaryUse boundary_use(const G1i& side, const PerfectMatching& m);

// ---------------------------------------------------------------------------
// Distance-2 edge reduction: delete the endpoints of f = uv and add the
// edges alpha-beta and gamma-delta, where alpha, gamma are u's other
// neighbors and beta, delta are v's.
// ---------------------------------------------------------------------------
struct EdgeReduction {
    CubicGraph graph;
    Edge f;
    int u = 0, v = 0;
    int alpha = 0, gamma = 0;  // neighbors of u
    int beta = 0, delta = 0;   // neighbors of v; pairing alpha-beta, gamma-delta
    Edge added_ab;             // image of alpha-beta in graph
    Edge added_gd;             // image of gamma-delta in graph
    std::vector<int> to_old;
    std::vector<int> to_new;
};

// The pairing is fixed by naming alpha (a neighbor of u, the chosen side of
// f) and beta (the neighbor of v paired with it).
EdgeReduction reduce_edge(const CubicGraph& g, Edge f, int u, int alpha, int beta);

// M = m' u {u gamma, v delta} minus gamma-delta when gamma-delta is in m',
// and m' u {f} otherwise.  No extension exists when m' uses alpha-beta.
PerfectMatching extend_matching_edge_reduction(const EdgeReduction& red,
                                               const PerfectMatching& m_prime);

// Replaces the 3-edge path alpha-u-v-beta (or gamma-u-v-delta) of a circuit
// through f by the added edge.  The circuit must traverse f with the
// reduction's pairing.
Circuit rewrite_circuit_through_f(const EdgeReduction& red, const Circuit& c_f);

// ---------------------------------------------------------------------------
// 5-circuit smoothing: delete the edge t3 t4 and smooth both its endpoints,
// adding t2 t'_3 and t5 t'_4 where t'_i is the outside neighbor of t_i.
// ---------------------------------------------------------------------------
struct FiveCircuitSmoothing {
    CubicGraph graph;
    std::array<int, 5> t{};      // t1..t5 in circuit order (old ids)
    std::array<int, 5> t_out{};  // outside neighbors t'_1..t'_5
    Edge p;                      // image of t2 t'_3 in graph
    Edge q;                      // image of t5 t'_4 in graph
    std::vector<int> to_old;
    std::vector<int> to_new;
};

FiveCircuitSmoothing smooth_5circuit(const CubicGraph& g, const std::array<int, 5>& t);

PerfectMatching extend_matching_smoothing(const FiveCircuitSmoothing& s,
                                          const PerfectMatching& m_prime);

}  // namespace charm
