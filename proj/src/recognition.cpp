#include "opo/recognition.hpp"

#include "opo/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace opo {

namespace {

int edge_index(const std::vector<Edge> &es, Vertex a, Vertex b)
{
	Edge e(a, b);
	return int(std::lower_bound(es.begin(), es.end(), e) - es.begin());
}

// Literal stating that the edge between v and u is oriented v -> u.
Literal arc_literal(const std::vector<Edge> &es, Vertex v, Vertex u)
{
	int x = edge_index(es, v, u);
	return v < u ? Literal::pos(x) : Literal::neg(x);
}

} // namespace

TwoSatInstance build_2sat(const Graph &g)
{
	const std::vector<Edge> es = g.edges();
	TwoSatInstance inst;
	inst.var_count = int(es.size());
	for (Vertex v = 0; v < g.order(); ++v) {
		std::vector<Vertex> nb = g.neighbors(v);
		for (std::size_t i = 0; i < nb.size(); ++i)
			for (std::size_t j = i + 1; j < nb.size(); ++j)
				if (!g.adjacent(nb[i], nb[j]))
					inst.add(~arc_literal(es, v, nb[i]), ~arc_literal(es, v, nb[j]));
	}
	return inst;
}

std::optional<Orientation> recognize(const Graph &g)
{
	auto assignment = solve_2sat(build_2sat(g));
	if (!assignment)
		return std::nullopt;
	Orientation d = Orientation::from_edge_bits(g, *assignment);
#ifndef NDEBUG
	if (!verify_1perfect(d))
		throw std::logic_error("recognize produced an orientation that is not 1-perfect");
#endif
	return d;
}

} // namespace opo
