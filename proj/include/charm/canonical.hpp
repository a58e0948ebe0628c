#pragma once

#include <string>

#include "charm/graph.hpp"

namespace charm {

// canonical representative encoded as a graph6 string: equal iff isomorphic
std::string canonical_form(const CubicGraph& g);
bool is_isomorphic(const CubicGraph& a, const CubicGraph& b);

// perm[old] = new label; must be a bijection on 0..n-1
CubicGraph relabeled(const CubicGraph& g, const std::vector<int>& perm);

}  // namespace charm
