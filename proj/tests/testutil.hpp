#pragma once

// the handful of named graphs the tests keep coming back to

#include <vector>

#include "charm/graph.hpp"

namespace charm {

inline CubicGraph k4() {
    return CubicGraph::from_edges(
        4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)});
}

inline CubicGraph k33() {
    std::vector<Edge> es;
    for (int a : {0, 1, 2})
        for (int b : {3, 4, 5}) es.push_back(Edge(a, b));
    return CubicGraph::from_edges(6, es);
}

inline CubicGraph prism() {
    return CubicGraph::from_edges(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4),
                                      Edge(4, 5), Edge(3, 5), Edge(0, 3), Edge(1, 4),
                                      Edge(2, 5)});
}

inline CubicGraph cube() {
    std::vector<Edge> es;
    for (int i = 0; i < 4; ++i) {
        es.push_back(Edge(i, (i + 1) % 4));
        es.push_back(Edge(4 + i, 4 + (i + 1) % 4));
        es.push_back(Edge(i, 4 + i));
    }
    return CubicGraph::from_edges(8, es);
}

inline CubicGraph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(Edge(i, (i + 1) % 5));
        es.push_back(Edge(5 + i, 5 + (i + 2) % 5));
        es.push_back(Edge(i, 5 + i));
    }
    return CubicGraph::from_edges(10, es);
}

}  // namespace charm
