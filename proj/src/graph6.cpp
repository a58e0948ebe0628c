#include "charm/graph6.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace charm {

CubicGraph parse_graph6(std::string_view line) {
    if (line.empty()) fail(errc::malformed_graph6, "empty record");
    const unsigned char first = static_cast<unsigned char>(line[0]);
    if (first == 126) fail(errc::malformed_graph6, "long form (n > 62) unsupported");
    if (first < 63 || first > 125) fail(errc::malformed_graph6, "bad order byte");
    const int n = first - 63;
    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + nbytes)
        fail(errc::malformed_graph6, "record length " + std::to_string(line.size()) +
                                         ", expected " + std::to_string(1 + nbytes));
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const unsigned char c = static_cast<unsigned char>(line[1 + bit / 6]);
            if (c < 63 || c > 126) fail(errc::malformed_graph6, "bad data byte");
            if ((c - 63) >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
        }
    // padding bits must be zero
    for (int b = nbits; b < 6 * nbytes; ++b) {
        const unsigned char c = static_cast<unsigned char>(line[1 + b / 6]);
        if ((c - 63) >> (5 - b % 6) & 1) fail(errc::malformed_graph6, "nonzero padding");
    }
    return CubicGraph::from_edges(n, edges);
}

std::string write_graph6(const CubicGraph& g) {
    const int n = g.order();
    const int nbits = n * (n - 1) / 2;
    std::string out(1 + (nbits + 5) / 6, char(63));
    out[0] = static_cast<char>(63 + n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) out[1 + bit / 6] += char(1 << (5 - bit % 6));
    return out;
}

CubicGraph parse_adjacency_text(std::istream& in) {
    int n = 0;
    if (!(in >> n)) fail(errc::malformed_graph6, "missing vertex count");
    if (n < 1 || n > 62) fail(errc::bad_size, "vertex count " + std::to_string(n));
    std::vector<std::vector<int>> lists(n);
    for (int v = 0; v < n; ++v) {
        std::string label;
        if (!(in >> label)) fail(errc::malformed_graph6, "truncated adjacency list");
        if (!label.empty() && label.back() == ':') label.pop_back();
        if (label != std::to_string(v))
            fail(errc::malformed_graph6, "expected row " + std::to_string(v) + ", got " + label);
        for (int k = 0; k < 3; ++k) {
            int w;
            if (!(in >> w)) fail(errc::malformed_graph6, "truncated neighbor list");
            lists[v].push_back(w);
        }
    }
    return CubicGraph::from_adjacency(lists);
}

std::string write_adjacency_text(const CubicGraph& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (int v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        out << v << ": " << nb[0] << " " << nb[1] << " " << nb[2] << "\n";
    }
    return out.str();
}

std::vector<CubicGraph> read_graphs(std::istream& in) {
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    // digits-only first token means adjacency text (graph6 bytes are >= 63)
    size_t p = content.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && std::isdigit(static_cast<unsigned char>(content[p]))) {
        std::istringstream is(content);
        std::vector<CubicGraph> out;
        out.push_back(parse_adjacency_text(is));
        return out;
    }
    std::vector<CubicGraph> out;
    std::istringstream is(content);
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line.rfind(">>graph6<<", 0) == 0) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

std::vector<CubicGraph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::malformed_graph6, "cannot open " + path);
    return read_graphs(in);
}

}  // namespace charm
