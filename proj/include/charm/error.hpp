#pragma once

#include <stdexcept>
#include <string>

namespace charm {

// every domain failure carries one of these codes so callers can dispatch
// without parsing message text
enum class errc {
    not_cubic,
    not_simple,
    disconnected,
    bad_index,
    bad_size,
    malformed_graph6,
    edge_not_in_graph,
    invalid_factor,
    invalid_matching,
    circuits_not_disjoint,
    not_a_circuit,
    not_a_triangle,
    contraction_not_simple,
    not_klee,
    not_klee_ladder,
    not_a_cyclic_cut,
    wrong_cut_size,
    too_many_crossings,
    index_mismatch,
    not_a_4circuit,
    not_a_5circuit,
    would_create_parallel,
    pairing_mismatch,
    neighbors_collide,
    connectivity_too_low,
    klee_input,
    internal_no_witness,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace charm
