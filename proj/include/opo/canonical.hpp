#pragma once

#include "opo/graph.hpp"

#include <string>
#include <vector>

namespace opo {

// Canonical relabelling by partition refinement and individualisation,
// keeping the lexicographically least graph6 string over all leaves.
// Twins inside a cell are individualised only once. Exponential in the
// worst case; intended for small graphs.
std::vector<Vertex> canonical_labeling(const Graph &g);
// label[v] is the new label of v.
Graph relabel(const Graph &g, const std::vector<Vertex> &label);
Graph canonical_form(const Graph &g);
bool isomorphic(const Graph &a, const Graph &b);

} // namespace opo
