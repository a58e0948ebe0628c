// command line front end: analysis, witness solving, catalog verification,
// family generation and classification, the reduction surgeries, and the
// prescription no matching satisfies

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "charm/canonical.hpp"
#include "charm/catalog.hpp"
#include "charm/connectivity.hpp"
#include "charm/enumerate.hpp"
#include "charm/error.hpp"
#include "charm/families.hpp"
#include "charm/graph6.hpp"
#include "charm/reductions.hpp"
#include "charm/solver.hpp"
#include "charm/verify.hpp"

namespace {

using namespace charm;

std::vector<CubicGraph> load_graphs(const std::string& path) {
    if (path == "-") return read_graphs(std::cin);
    return read_graph_file(path);
}

Edge parse_edge(const std::string& text) {
    for (char sep : {',', '-'}) {
        auto pos = text.find(sep);
        if (pos == std::string::npos) continue;
        return Edge(std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 1)));
    }
    throw std::runtime_error("edge must be given as u,v or u-v");
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

OnePlusFactor parse_factor(const std::string& text) {
    OnePlusFactor f;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) f.edges.push_back(parse_edge(tok));
    return f;
}

std::string edge_list(const std::vector<Edge>& edges) {
    std::string out;
    for (Edge e : edges) {
        if (!out.empty()) out += ",";
        out += to_string(e);
    }
    return out;
}

SolveConfig base_config() {
    SolveConfig cfg;
    if (const char* env = std::getenv("CHARM_THRESHOLD")) {
        int t = std::atoi(env);
        if (t > 0) cfg.brute_force_threshold = t;
    }
    return cfg;
}

int run_analyze(const std::string& path) {
    auto graphs = load_graphs(path);
    for (size_t k = 0; k < graphs.size(); ++k) {
        const CubicGraph& g = graphs[k];
        LadderFamily fam = classify_ladder_family(g);
        std::cout << "graph " << k << ": " << write_graph6(g) << "\n"
                  << "  order " << g.order() << ", size " << g.size() << ", girth "
                  << girth(g) << "\n"
                  << "  bridgeless " << (is_bridgeless(g) ? "yes" : "no")
                  << ", cyclic edge connectivity " << cyclic_edge_connectivity(g) << "\n"
                  << "  klee " << (is_klee(g) ? "yes" : "no") << ", family "
                  << (fam.kind == LadderKind::none ? "none" : ladder_kind_name(fam.kind))
                  << "\n";
    }
    return 0;
}

int run_solve(const std::string& path, size_t index, const std::string& edge_text,
              const std::string& circuits_text, const std::string& factor_text,
              int threshold, bool use_oracle, bool as_json) {
    auto graphs = load_graphs(path);
    if (index >= graphs.size()) throw error(errc::bad_index, "graph index out of range");
    const CubicGraph& g = graphs[index];
    Edge e = parse_edge(edge_text);

    SolveConfig cfg = base_config();
    if (threshold > 0) cfg.brute_force_threshold = threshold;

    CircuitCollection cc = parse_circuits(circuits_text);
    if (!factor_text.empty()) {
        OnePlusFactor f = parse_factor(factor_text);
        cc = circuits_from_one_plus_factor(g, f);
    }

    if (use_oracle) {
        auto m = oracle_charm(g, e, cc);
        if (as_json) {
            nlohmann::json out;
            out["graph"] = write_graph6(g);
            out["edge"] = to_string(e);
            out["circuits"] = circuits_to_string(cc);
            out["feasible"] = bool(m);
            if (m) out["matching"] = edge_list(m->edges);
            std::cout << out.dump(2) << "\n";
        } else if (m) {
            std::cout << "matching " << edge_list(m->edges) << "\n";
        } else {
            std::cout << "no witness: the prescription is infeasible\n";
        }
        return m ? 0 : 3;
    }

    CharmResult r = charm_matching(g, e, cc, cfg);
    if (as_json) {
        nlohmann::json out;
        out["graph"] = write_graph6(g);
        out["edge"] = to_string(e);
        out["circuits"] = circuits_to_string(cc);
        out["matching"] = edge_list(r.matching.edges);
        out["oracle_fallback"] = r.used_oracle_fallback;
        out["trace"] = nlohmann::json::array();
        for (const ReductionStep& s : r.trace)
            out["trace"].push_back({{"rule", s.rule}, {"detail", s.detail}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "matching " << edge_list(r.matching.edges) << "\n";
        for (const ReductionStep& s : r.trace)
            std::cout << "  " << s.rule << ": " << s.detail << "\n";
        if (r.used_oracle_fallback) std::cout << "  (oracle fallback was used)\n";
    }
    return 0;
}

int run_verify(int nmax, uint64_t seed, int jobs, bool sampled, const std::string& graphs_path,
               const std::string& report_path) {
    std::vector<CubicGraph> catalog =
        graphs_path.empty() ? generate_cubic_catalog(nmax) : load_graphs(graphs_path);
    VerificationReport r = verify_theorem(catalog, nmax, !sampled, seed, jobs, base_config());
    std::string text = report_text(r);
    std::cout << text;
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << text;
    }
    return r.ok() ? 0 : 2;
}

int run_verify_acyclic(int nmax, const std::string& graphs_path) {
    std::vector<CubicGraph> catalog =
        graphs_path.empty() ? generate_cubic_catalog(nmax) : load_graphs(graphs_path);
    int failures = 0;
    long long checked = 0;
    for (const CubicGraph& g : catalog) {
        if (!is_bridgeless(g)) {
            std::cout << write_graph6(g) << " skipped (bridge)\n";
            continue;
        }
        ++checked;
        auto pair = verify_acyclic_plus(g);
        if (pair) {
            std::cout << write_graph6(g) << " ok: " << edge_list(pair->first.edges) << " / "
                      << edge_list(pair->second.edges) << "\n";
        } else {
            ++failures;
            std::cout << write_graph6(g) << " FAILED: no matching pair\n";
        }
    }
    std::cout << "acyclic-plus checked " << checked << " graphs, " << failures
              << " failures\n";
    return failures == 0 ? 0 : 2;
}

int run_families_gen(const std::string& kind_text, int size, int count, uint64_t seed) {
    if (kind_text == "klee" && count > 1) {
        std::mt19937 rng(static_cast<uint32_t>(seed));
        for (int k = 0; k < count; ++k)
            std::cout << write_graph6(random_klee_graph(size, rng)) << "\n";
        return 0;
    }
    LadderKind kind = LadderKind::none;
    if (kind_text == "klee") kind = LadderKind::klee_ladder;
    else if (kind_text == "ladder") kind = LadderKind::ladder;
    else if (kind_text == "moebius") kind = LadderKind::moebius_ladder;
    else if (kind_text == "quasi") kind = LadderKind::quasi_ladder;
    else throw std::runtime_error("kind must be klee, ladder, moebius or quasi");
    std::cout << write_graph6(make_family(kind, size)) << "\n";
    return 0;
}

int run_families_classify(const std::string& path) {
    for (const CubicGraph& g : load_graphs(path)) {
        LadderFamily fam = classify_ladder_family(g);
        if (fam.kind == LadderKind::none)
            std::cout << write_graph6(g) << " none\n";
        else
            std::cout << write_graph6(g) << " " << ladder_kind_name(fam.kind) << " k "
                      << fam.k << "\n";
    }
    return 0;
}

void print_map(const char* label, const std::vector<int>& to_old) {
    std::cout << "  " << label << ":";
    for (size_t k = 0; k < to_old.size(); ++k) std::cout << " " << k << "<-" << to_old[k];
    std::cout << "\n";
}

int run_reduce_3cut(const std::string& path, size_t index) {
    auto graphs = load_graphs(path);
    if (index >= graphs.size()) throw error(errc::bad_index, "graph index out of range");
    const CubicGraph& g = graphs[index];
    auto cut = find_cyclic_edge_cut(g, 3);
    if (!cut || cut->crossing.size() != 3)
        throw error(errc::not_a_cyclic_cut, "no cyclic edge cut of size three");
    ThreeCutSplit sp = split_on_3cut(g, *cut);
    std::cout << "charm-reduce 1\n";
    std::cout << "cut " << edge_list({sp.cut.begin(), sp.cut.end()}) << "\n";
    std::cout << "side-one " << write_graph6(sp.g_prime) << " hub " << sp.v_prime << "\n";
    print_map("vertices", sp.prime_to_old);
    std::cout << "side-two " << write_graph6(sp.g_dprime) << " hub " << sp.v_dprime << "\n";
    print_map("vertices", sp.dprime_to_old);
    return 0;
}

int run_reduce_4circuit(const std::string& path, size_t index, const std::string& circuit_text,
                        int i) {
    auto graphs = load_graphs(path);
    if (index >= graphs.size()) throw error(errc::bad_index, "graph index out of range");
    const CubicGraph& g = graphs[index];
    std::array<int, 4> q{};
    if (!circuit_text.empty()) {
        auto vs = parse_ints(circuit_text);
        if (vs.size() != 4) throw std::runtime_error("need four circuit vertices");
        std::copy(vs.begin(), vs.end(), q.begin());
    } else {
        auto fours = four_circuits_of(g);
        if (fours.empty()) throw std::runtime_error("graph has no circuit of length four");
        std::copy(fours.front().vertices.begin(), fours.front().vertices.end(), q.begin());
    }
    G1i side = build_g1i(g, q, i);
    std::cout << "charm-reduce 1\n";
    std::cout << "reduced " << write_graph6(side.graph) << " x " << side.x << " y " << side.y
              << " i " << side.i << "\n";
    std::cout << "boundary " << edge_list({side.boundary.begin(), side.boundary.end()})
              << "\n";
    print_map("vertices", side.to_old);
    return 0;
}

int run_reduce_4cut(const std::string& path, size_t index, int i) {
    auto graphs = load_graphs(path);
    if (index >= graphs.size()) throw error(errc::bad_index, "graph index out of range");
    const CubicGraph& g = graphs[index];
    auto cut = find_cyclic_edge_cut(g, 4);
    if (!cut || cut->crossing.size() != 4)
        throw error(errc::not_a_cyclic_cut, "no cyclic edge cut of size four");
    auto [a, b] = build_g1i(g, *cut, i);
    std::cout << "charm-reduce 1\n";
    std::cout << "cut " << edge_list(cut->crossing) << "\n";
    std::cout << "side-one " << write_graph6(a.graph) << " x " << a.x << " y " << a.y << "\n";
    print_map("vertices", a.to_old);
    std::cout << "side-two " << write_graph6(b.graph) << " x " << b.x << " y " << b.y << "\n";
    print_map("vertices", b.to_old);
    return 0;
}

int run_reduce_edge(const std::string& path, size_t index, const std::string& edge_text,
                    int from, int alpha, int beta) {
    auto graphs = load_graphs(path);
    if (index >= graphs.size()) throw error(errc::bad_index, "graph index out of range");
    const CubicGraph& g = graphs[index];
    Edge f = parse_edge(edge_text);
    if (from < 0) from = f.u;
    if (alpha < 0) {
        for (int w : g.neighbors(from))
            if (!f.incident(w)) alpha = std::max(alpha, w);
    }
    if (beta < 0) {
        for (int w : g.neighbors(f.other(from)))
            if (!f.incident(w)) beta = std::max(beta, w);
    }
    EdgeReduction red = reduce_edge(g, f, from, alpha, beta);
    std::cout << "charm-reduce 1\n";
    std::cout << "reduced " << write_graph6(red.graph) << "\n";
    std::cout << "pairing " << red.alpha << "-" << red.beta << " and " << red.gamma << "-"
              << red.delta << "\n";
    print_map("vertices", red.to_old);
    return 0;
}

int run_reduce_smooth(const std::string& path, size_t index, const std::string& circuit_text) {
    auto graphs = load_graphs(path);
    if (index >= graphs.size()) throw error(errc::bad_index, "graph index out of range");
    const CubicGraph& g = graphs[index];
    std::array<int, 5> t{};
    auto vs = parse_ints(circuit_text);
    if (vs.size() != 5) throw std::runtime_error("need five circuit vertices");
    std::copy(vs.begin(), vs.end(), t.begin());
    FiveCircuitSmoothing s = smooth_5circuit(g, t);
    std::cout << "charm-reduce 1\n";
    std::cout << "smoothed " << write_graph6(s.graph) << "\n";
    std::cout << "added " << to_string(s.p) << " " << to_string(s.q) << "\n";
    print_map("vertices", s.to_old);
    return 0;
}

int run_demo(int size) {
    CounterexampleDemo d = demo_counterexample(size);
    std::cout << describe(d);
    return d.witness_exists ? 2 : 0;
}

int run_catalog(int nmax) {
    for (const CubicGraph& g : generate_cubic_catalog(nmax))
        std::cout << write_graph6(g) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect matchings through a prescribed edge hitting prescribed circuits"};
    app.require_subcommand(1);

    std::string path = "-";
    size_t index = 0;
    std::string edge_text, circuits_text, factor_text, kind_text, circuit_text;
    std::string graphs_path, report_path;
    int threshold = 0, nmax = 10, jobs = 0, size = 12, count = 1, gi = 3;
    int from = -1, alpha = -1, beta = -1;
    uint64_t seed = 0;
    bool sampled = false, as_json = false, use_oracle = false;

    auto* analyze = app.add_subcommand("analyze", "connectivity, girth and family report");
    analyze->add_option("file", path, "graph6 or adjacency file, - for stdin");

    auto* solve = app.add_subcommand("solve", "matching through an edge hitting circuits");
    solve->add_option("--graph", path, "graph6 or adjacency file, - for stdin")->required();
    solve->add_option("--index", index, "which graph in the file (default 0)");
    solve->add_option("--edge", edge_text, "prescribed edge u,v")->required();
    solve->add_option("--circuits", circuits_text, "disjoint circuits, e.g. 0,1,2;5,6,7,8");
    solve->add_option("--factor", factor_text,
                      "spanning subgraph edges u-v,...; its circuits replace --circuits");
    solve->add_option("--threshold", threshold, "brute force threshold override");
    solve->add_flag("--oracle", use_oracle, "run the enumeration oracle only");
    solve->add_flag("--json", as_json, "machine readable output");

    auto* verify = app.add_subcommand("verify", "catalog-wide witness verification");
    verify->add_option("--nmax", nmax, "largest order to generate (default 10)");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--jobs", jobs, "worker threads, 0 = hardware");
    verify->add_flag("--sampled", sampled, "sample collections instead of exhausting");
    verify->add_option("--graphs", graphs_path, "verify this file instead of generating");
    verify->add_option("--report", report_path, "also write the report here");
    bool acyclic = false;
    verify->add_flag("--acyclic-plus", acyclic,
                     "check the two-matching acyclic complement property instead");

    auto* families = app.add_subcommand("families", "generate or classify the ladder families");
    families->require_subcommand(1);
    auto* gen = families->add_subcommand("gen", "emit family members as graph6");
    gen->add_option("--kind", kind_text, "klee, ladder, moebius or quasi")->required();
    gen->add_option("--size", size, "vertex count")->required();
    gen->add_option("--count", count, "random klee samples (kind klee only)");
    gen->add_option("--seed", seed, "sampling seed");
    auto* classify = families->add_subcommand("classify", "name the family of each graph");
    classify->add_option("file", path, "graph6 or adjacency file, - for stdin");

    auto* reduce = app.add_subcommand("reduce", "apply one reduction surgery");
    reduce->require_subcommand(1);
    auto* r3 = reduce->add_subcommand("3cut", "split on a cyclic 3-edge cut");
    r3->add_option("--graph", path)->required();
    r3->add_option("--index", index);
    auto* r4c = reduce->add_subcommand("4circuit", "reduce a circuit of length four");
    r4c->add_option("--graph", path)->required();
    r4c->add_option("--index", index);
    r4c->add_option("--circuit", circuit_text, "four vertices in circuit order");
    r4c->add_option("--i", gi, "attachment pattern, 2, 3 or 4");
    auto* r4 = reduce->add_subcommand("4cut", "reduce both sides of a cyclic 4-edge cut");
    r4->add_option("--graph", path)->required();
    r4->add_option("--index", index);
    r4->add_option("--i", gi, "attachment pattern, 2, 3 or 4");
    auto* re = reduce->add_subcommand("edge", "distance-2 edge reduction");
    re->add_option("--graph", path)->required();
    re->add_option("--index", index);
    re->add_option("--edge", edge_text, "edge u,v to remove")->required();
    re->add_option("--from", from, "endpoint whose neighbor is alpha");
    re->add_option("--alpha", alpha, "neighbor of the chosen endpoint");
    re->add_option("--beta", beta, "neighbor of the other endpoint paired with alpha");
    auto* rs = reduce->add_subcommand("smooth", "smooth a circuit of length five");
    rs->add_option("--graph", path)->required();
    rs->add_option("--index", index);
    rs->add_option("--circuit", circuit_text, "five vertices in circuit order")->required();

    auto* demo = app.add_subcommand("demo", "counterexample demonstrations");
    demo->require_subcommand(1);
    auto* ce = demo->add_subcommand("counterexample",
                                    "the prescription on a Klee ladder no matching satisfies");
    ce->add_option("--size", size, "ladder order, even, at least 6 (default 12)");

    auto* cat = app.add_subcommand("catalog", "emit the connected cubic catalog as graph6");
    cat->add_option("--nmax", nmax, "largest order (default 10)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(path);
        if (*solve)
            return run_solve(path, index, edge_text, circuits_text, factor_text, threshold,
                             use_oracle, as_json);
        if (*verify)
            return acyclic ? run_verify_acyclic(nmax, graphs_path)
                           : run_verify(nmax, seed, jobs, sampled, graphs_path, report_path);
        if (*gen) return run_families_gen(kind_text, size, count, seed);
        if (*classify) return run_families_classify(path);
        if (*r3) return run_reduce_3cut(path, index);
        if (*r4c) return run_reduce_4circuit(path, index, circuit_text, gi);
        if (*r4) return run_reduce_4cut(path, index, gi);
        if (*re) return run_reduce_edge(path, index, edge_text, from, alpha, beta);
        if (*rs) return run_reduce_smooth(path, index, circuit_text);
        if (*ce) return run_demo(size);
        if (*cat) return run_catalog(nmax);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
