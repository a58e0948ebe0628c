#pragma once

#include <vector>

#include "charm/graph.hpp"

namespace charm {

// one representative per isomorphism class of connected cubic graphs of every
// even order from 4 up to n_max, sorted by order then canonical code; the
// representatives are canonically labeled
std::vector<CubicGraph> generate_cubic_catalog(int n_max);

}  // namespace charm
