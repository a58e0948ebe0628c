#include "charm/verify.hpp"

#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "charm/connectivity.hpp"
#include "charm/enumerate.hpp"
#include "charm/error.hpp"
#include "charm/families.hpp"
#include "charm/graph6.hpp"

namespace charm {

const char* graph_status_name(GraphStatus s) {
    switch (s) {
        case GraphStatus::verified: return "verified";
        case GraphStatus::skipped_klee: return "skipped-klee";
        case GraphStatus::skipped_connectivity: return "skipped-connectivity";
        case GraphStatus::failed: return "FAILED";
    }
    return "?";
}

int VerificationReport::counted(GraphStatus s) const {
    int c = 0;
    for (const auto& gr : graphs)
        if (gr.status == s) ++c;
    return c;
}

std::string circuits_to_string(const CircuitCollection& cc) {
    std::string out;
    for (const Circuit& c : cc.circuits) {
        if (!out.empty()) out += ';';
        for (size_t i = 0; i < c.vertices.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(c.vertices[i]);
        }
    }
    return out;
}

CircuitCollection parse_circuits(const std::string& text) {
    std::vector<Circuit> cs;
    std::stringstream blocks(text);
    std::string block;
    while (std::getline(blocks, block, ';')) {
        std::vector<int> vs;
        std::stringstream items(block);
        std::string item;
        while (std::getline(items, item, ',')) {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) fail(errc::bad_index, "bad circuit vertex '" + item + "'");
            vs.push_back(v);
        }
        if (!vs.empty()) cs.emplace_back(std::move(vs));
    }
    return CircuitCollection(std::move(cs));
}

namespace {

uint64_t mix_seed(uint64_t seed, const std::string& key) {
    uint64_t h = 1469598103934665603ull ^ seed;
    for (char c : key) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<CircuitCollection> pick_collections(const CubicGraph& g, bool full, uint64_t seed,
                                                const std::string& key) {
    std::vector<CircuitCollection> out;
    if (full) {
        out = enumerate_disjoint_circuit_collections(g);
    } else {
        // reservoir of 64 over the first 5000 collections in enumeration order
        std::mt19937_64 rng(mix_seed(seed, key));
        int seen = 0;
        for_each_disjoint_circuit_collection(g, {}, [&](const CircuitCollection& cc) {
            ++seen;
            if (out.size() < 64) {
                out.push_back(cc);
            } else {
                std::uniform_int_distribution<int> d(0, seen - 1);
                int j = d(rng);
                if (j < 64) out[static_cast<size_t>(j)] = cc;
            }
            return seen < 5000;
        });
    }
    out.push_back(CircuitCollection{});  // the unconstrained instance
    return out;
}

GraphReport check_graph(const CubicGraph& g, bool exhaustive, uint64_t seed,
                        const SolveConfig& config) {
    GraphReport r;
    r.graph6 = write_graph6(g);
    if (find_cyclic_edge_cut(g, 2)) {
        r.status = GraphStatus::skipped_connectivity;
        return r;
    }
    if (is_klee(g)) {
        r.status = GraphStatus::skipped_klee;
        return r;
    }
    bool full = exhaustive && g.order() <= 12;
    auto collections = pick_collections(g, full, seed, r.graph6);
    for (const CircuitCollection& cc : collections) {
        for (Edge e : g.edges()) {
            ++r.instances;
            auto instance = [&] {
                return "edge=" + to_string(e) + " circuits=" + circuits_to_string(cc);
            };
            if (!oracle_charm(g, e, cc)) {
                r.status = GraphStatus::failed;
                r.failure = instance() + " reason=oracle found no witness";
                return r;
            }
            try {
                CharmResult res = charm_matching(g, e, cc, config);
                if (!charm_witness_ok(g, e, cc, res.matching)) {
                    r.status = GraphStatus::failed;
                    r.failure = instance() + " reason=returned matching is not a witness";
                    return r;
                }
            } catch (const error& err) {
                r.status = GraphStatus::failed;
                r.failure = instance() + " reason=" + errc_name(err.code()) + ": " + err.what();
                return r;
            }
        }
    }
    r.status = GraphStatus::verified;
    return r;
}

}  // namespace

VerificationReport verify_theorem(const std::vector<CubicGraph>& catalog, int n_max,
                                  bool exhaustive, uint64_t seed, int jobs,
                                  const SolveConfig& config) {
    VerificationReport rep;
    rep.n_max = n_max;
    rep.exhaustive = exhaustive;
    rep.seed = seed;

    std::vector<const CubicGraph*> picked;
    for (const CubicGraph& g : catalog)
        if (g.order() <= n_max) picked.push_back(&g);
    rep.graphs.resize(picked.size());

    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (size_t i = cursor.fetch_add(1); i < picked.size(); i = cursor.fetch_add(1))
            rep.graphs[i] = check_graph(*picked[i], exhaustive, seed, config);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (const GraphReport& gr : rep.graphs) rep.instances += gr.instances;
    return rep;
}

std::string report_text(const VerificationReport& r) {
    std::string out = "charm-verify 1\n";
    out += "n_max=" + std::to_string(r.n_max);
    out += std::string(" mode=") + (r.exhaustive ? "exhaustive" : "sampled");
    out += " seed=" + std::to_string(r.seed) + "\n";
    for (const GraphReport& gr : r.graphs) {
        out += "graph " + gr.graph6 + " " + graph_status_name(gr.status);
        if (gr.instances) out += " instances=" + std::to_string(gr.instances);
        if (!gr.failure.empty()) out += " " + gr.failure;
        out += "\n";
    }
    out += "summary graphs=" + std::to_string(r.graphs.size());
    out += " verified=" + std::to_string(r.counted(GraphStatus::verified));
    out += " skipped=" + std::to_string(r.counted(GraphStatus::skipped_klee) +
                                        r.counted(GraphStatus::skipped_connectivity));
    out += " failed=" + std::to_string(r.counted(GraphStatus::failed));
    out += " instances=" + std::to_string(r.instances);
    out += r.ok() ? " ok\n" : " FAILED\n";
    return out;
}

std::optional<std::pair<PerfectMatching, PerfectMatching>> verify_acyclic_plus(
    const CubicGraph& g) {
    auto pms = enumerate_perfect_matchings(g);
    for (size_t i = 0; i < pms.size(); ++i)
        for (size_t j = i + 1; j < pms.size(); ++j) {
            Subgraph rest = complement_subgraph(g, {pms[i].edges, pms[j].edges});
            if (!is_acyclic(rest)) continue;
            bool short_paths = true;
            for (int len : component_orders(rest))
                if (len != 2 && len != 3) short_paths = false;
            if (short_paths) return std::make_pair(pms[i], pms[j]);
        }
    return std::nullopt;
}

CounterexampleDemo demo_counterexample(int n) {
    if (n < 6 || n % 2 != 0) fail(errc::bad_size, "order must be even and at least 6");
    CounterexampleDemo d;
    d.graph = make_klee_ladder(n);
    d.special_edge = klee_ladder_special_edge(d.graph);
    auto through = enumerate_perfect_matchings(d.graph, d.special_edge);
    if (through.size() != 1)
        fail(errc::internal_no_witness, "special edge not in exactly one matching");
    d.matching = through.front();
    CircuitCollection cc =
        circuits_from_one_plus_factor(d.graph, OnePlusFactor(d.matching.edges));
    if (cc.count() != 1 || cc.circuits.front().length() != n)
        fail(errc::internal_no_witness, "matching complement is not a spanning circuit");
    d.spanning_circuit = cc.circuits.front();
    d.witness_exists = oracle_charm(d.graph, d.special_edge, cc).has_value();
    return d;
}

std::string describe(const CounterexampleDemo& d) {
    std::string out;
    out += "Klee ladder on " + std::to_string(d.graph.order()) + " vertices: " +
           write_graph6(d.graph) + "\n";
    out += "edge " + to_string(d.special_edge) + " lies in exactly one perfect matching:";
    for (Edge e : d.matching.edges) out += " " + to_string(e);
    out += "\nits complement is the spanning circuit";
    for (int v : d.spanning_circuit.vertices) out += " " + std::to_string(v);
    out += "\nmatching through the edge meeting that circuit: ";
    out += d.witness_exists ? "exists (unexpected)" : "none";
    out += "\n";
    return out;
}

}  // namespace charm
