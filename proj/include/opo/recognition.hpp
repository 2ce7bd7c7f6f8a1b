#pragma once

#include "opo/graph.hpp"
#include "opo/twosat.hpp"

#include <optional>

namespace opo {

// One variable per canonical edge {u,v}, u < v; true means u -> v.
// For every vertex v and non-adjacent neighbours u, w of v there is one
// clause forbidding v -> u together with v -> w.
TwoSatInstance build_2sat(const Graph &g);

// Polynomial recognition. The returned orientation is 1-perfect.
std::optional<Orientation> recognize(const Graph &g);

inline bool is_1po(const Graph &g) { return recognize(g).has_value(); }

} // namespace opo
