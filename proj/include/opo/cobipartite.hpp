#pragma once

#include "opo/graph.hpp"
#include "opo/oracle.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace opo {

// Partition of V(G) into two cliques; either side may be empty.
struct CliqueBipartition
{
	std::vector<Vertex> u;
	std::vector<Vertex> u_prime;
};

bool is_clique_bipartition(const Graph &g, const CliqueBipartition &parts);

// Two-colouring of the complement; the lowest label of each complement
// component is placed in u.
std::optional<CliqueBipartition> find_clique_bipartition(const Graph &g);

enum class EdgeColor { Red, Blue };

// Colour per crossing edge (one endpoint in u, the other in u').
struct GoodColoring
{
	std::vector<Edge> crossing;     // sorted
	std::vector<EdgeColor> colors;  // parallel to crossing

	EdgeColor color(Edge e) const;
};

std::vector<Edge> crossing_edges(const Graph &g, const CliqueBipartition &parts);

// Every induced 4-cycle contains exactly two crossing edges (one edge in
// each clique); returns those pairs.
std::vector<std::pair<Edge, Edge>> crossing_pairs_of_induced_c4s(const Graph &g, const CliqueBipartition &parts);

// Checks the domain and the opposite-colour condition.
bool is_good_coloring(const Graph &g, const CliqueBipartition &parts, const GoodColoring &c);

// Two-colours the must-differ conflict graph on crossing edges.
// Throws std::invalid_argument when parts is not a clique bipartition.
std::optional<GoodColoring> good_coloring_exists(const Graph &g, const CliqueBipartition &parts);

// Red when the arc goes from u to u'. Throws std::invalid_argument if
// some induced 4-cycle is not oriented cyclically.
GoodColoring good_coloring_from_orientation(const Orientation &d, const CliqueBipartition &parts);

struct CobipartiteReport
{
	bool is_1po = false;
	bool has_c4_cyclic_orientation = false;
	bool has_good_coloring = false;

	bool agree() const
	{
		return is_1po == has_c4_cyclic_orientation && is_1po == has_good_coloring;
	}
};

class EquivalenceViolation : public std::logic_error
{
  public:
	using std::logic_error::logic_error;
};

// Evaluates the three properties independently. Throws
// std::invalid_argument when g is not co-bipartite, GuardExceeded when the
// middle property is out of reach, EquivalenceViolation when they differ.
CobipartiteReport cobipartite_equivalence(const Graph &g, int guard = default_oracle_guard);

} // namespace opo
