#include "charm/error.hpp"

namespace charm {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_cubic: return "NotCubic";
        case errc::not_simple: return "NotSimple";
        case errc::disconnected: return "Disconnected";
        case errc::bad_index: return "BadIndex";
        case errc::bad_size: return "BadSize";
        case errc::malformed_graph6: return "MalformedGraph6";
        case errc::edge_not_in_graph: return "EdgeNotInGraph";
        case errc::invalid_factor: return "InvalidFactor";
        case errc::invalid_matching: return "InvalidMatching";
        case errc::circuits_not_disjoint: return "CircuitsNotDisjoint";
        case errc::not_a_circuit: return "NotACircuit";
        case errc::not_a_triangle: return "NotATriangle";
        case errc::contraction_not_simple: return "ContractionNotSimple";
        case errc::not_klee: return "NotKlee";
        case errc::not_klee_ladder: return "NotKleeLadder";
        case errc::not_a_cyclic_cut: return "NotACyclicCut";
        case errc::wrong_cut_size: return "WrongCutSize";
        case errc::too_many_crossings: return "TooManyCrossings";
        case errc::index_mismatch: return "IndexMismatch";
        case errc::not_a_4circuit: return "NotA4Circuit";
        case errc::not_a_5circuit: return "NotA5Circuit";
        case errc::would_create_parallel: return "WouldCreateParallel";
        case errc::pairing_mismatch: return "PairingMismatch";
        case errc::neighbors_collide: return "NeighborsCollide";
        case errc::connectivity_too_low: return "ConnectivityTooLow";
        case errc::klee_input: return "KleeInput";
        case errc::internal_no_witness: return "InternalNoWitness";
    }
    return "UnknownError";
}

}  // namespace charm
