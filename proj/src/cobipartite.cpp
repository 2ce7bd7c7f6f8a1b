#include "opo/cobipartite.hpp"

#include "opo/recognition.hpp"

#include <algorithm>

namespace opo {

bool is_clique_bipartition(const Graph &g, const CliqueBipartition &parts)
{
	std::vector<char> seen(g.order(), 0);
	for (const auto *side : {&parts.u, &parts.u_prime})
		for (Vertex v : *side) {
			if (!g.contains(v) || seen[v])
				return false;
			seen[v] = 1;
		}
	if (std::count(seen.begin(), seen.end(), 1) != g.order())
		return false;
	return g.is_clique(parts.u) && g.is_clique(parts.u_prime);
}

std::optional<CliqueBipartition> find_clique_bipartition(const Graph &g)
{
	const int n = g.order();
	std::vector<int> side(n, -1);
	for (Vertex s = 0; s < n; ++s) {
		if (side[s] >= 0)
			continue;
		side[s] = 0;
		std::vector<Vertex> queue{s};
		for (std::size_t qi = 0; qi < queue.size(); ++qi) {
			Vertex v = queue[qi];
			for (Vertex u = 0; u < n; ++u) {
				if (u == v || g.adjacent(u, v))
					continue;
				if (side[u] < 0) {
					side[u] = 1 - side[v];
					queue.push_back(u);
				} else if (side[u] == side[v]) {
					return std::nullopt;
				}
			}
		}
	}
	CliqueBipartition parts;
	for (Vertex v = 0; v < n; ++v)
		(side[v] == 0 ? parts.u : parts.u_prime).push_back(v);
	return parts;
}

EdgeColor GoodColoring::color(Edge e) const
{
	auto it = std::lower_bound(crossing.begin(), crossing.end(), e);
	if (it == crossing.end() || *it != e)
		throw std::out_of_range("edge is not a crossing edge");
	return colors[it - crossing.begin()];
}

namespace {

std::vector<int> side_of(const Graph &g, const CliqueBipartition &parts)
{
	std::vector<int> side(g.order(), -1);
	for (Vertex v : parts.u)
		side[v] = 0;
	for (Vertex v : parts.u_prime)
		side[v] = 1;
	return side;
}

void require_parts(const Graph &g, const CliqueBipartition &parts)
{
	if (!is_clique_bipartition(g, parts))
		throw std::invalid_argument("not a clique bipartition of the graph");
}

} // namespace

std::vector<Edge> crossing_edges(const Graph &g, const CliqueBipartition &parts)
{
	auto side = side_of(g, parts);
	std::vector<Edge> out;
	for (const Edge &e : g.edges())
		if (side[e.u] != side[e.v])
			out.push_back(e);
	return out;
}

std::vector<std::pair<Edge, Edge>> crossing_pairs_of_induced_c4s(const Graph &g,
                                                                 const CliqueBipartition &parts)
{
	auto side = side_of(g, parts);
	std::vector<std::pair<Edge, Edge>> out;
	for (const auto &c : enumerate_chordless_cycles(g, 4)) {
		if (c.size() != 4)
			continue;
		std::vector<Edge> cross;
		for (int i = 0; i < 4; ++i)
			if (side[c[i]] != side[c[(i + 1) % 4]])
				cross.emplace_back(c[i], c[(i + 1) % 4]);
		// Two cliques cannot hold an induced C4 with fewer than two crossings.
		if (cross.size() == 2)
			out.emplace_back(cross[0], cross[1]);
	}
	return out;
}

bool is_good_coloring(const Graph &g, const CliqueBipartition &parts, const GoodColoring &c)
{
	if (!is_clique_bipartition(g, parts))
		return false;
	if (c.crossing != crossing_edges(g, parts) || c.colors.size() != c.crossing.size())
		return false;
	for (const auto &[e, f] : crossing_pairs_of_induced_c4s(g, parts))
		if (c.color(e) == c.color(f))
			return false;
	return true;
}

std::optional<GoodColoring> good_coloring_exists(const Graph &g, const CliqueBipartition &parts)
{
	require_parts(g, parts);
	GoodColoring result;
	result.crossing = crossing_edges(g, parts);
	const auto &cross = result.crossing;
	auto id = [&](Edge e) { return int(std::lower_bound(cross.begin(), cross.end(), e) - cross.begin()); };

	std::vector<std::vector<int>> conflict(cross.size());
	for (const auto &[e, f] : crossing_pairs_of_induced_c4s(g, parts)) {
		conflict[id(e)].push_back(id(f));
		conflict[id(f)].push_back(id(e));
	}
	std::vector<int> color(cross.size(), -1);
	for (std::size_t s = 0; s < cross.size(); ++s) {
		if (color[s] >= 0)
			continue;
		color[s] = 0;
		std::vector<int> queue{int(s)};
		for (std::size_t qi = 0; qi < queue.size(); ++qi) {
			int x = queue[qi];
			for (int y : conflict[x]) {
				if (color[y] < 0) {
					color[y] = 1 - color[x];
					queue.push_back(y);
				} else if (color[y] == color[x]) {
					return std::nullopt;
				}
			}
		}
	}
	for (int c : color)
		result.colors.push_back(c == 0 ? EdgeColor::Red : EdgeColor::Blue);
	return result;
}

GoodColoring good_coloring_from_orientation(const Orientation &d, const CliqueBipartition &parts)
{
	const Graph &g = d.base();
	require_parts(g, parts);
	for (const auto &c : enumerate_chordless_cycles(g, 4))
		if (c.size() == 4 && !is_cycle_cyclic(d, c))
			throw std::invalid_argument("good_coloring_from_orientation: an induced 4-cycle is not cyclic");
	auto side = side_of(g, parts);
	GoodColoring result;
	result.crossing = crossing_edges(g, parts);
	for (const Edge &e : result.crossing) {
		Vertex from = d.has_arc(e.u, e.v) ? e.u : e.v;
		result.colors.push_back(side[from] == 0 ? EdgeColor::Red : EdgeColor::Blue);
	}
	return result;
}

CobipartiteReport cobipartite_equivalence(const Graph &g, int guard)
{
	auto parts = find_clique_bipartition(g);
	if (!parts)
		throw std::invalid_argument("cobipartite_equivalence: graph is not co-bipartite");
	CobipartiteReport r;
	r.is_1po = recognize(g).has_value();
	r.has_c4_cyclic_orientation = exists_orientation_all_c4_cyclic(g, guard).has_value();
	auto coloring = good_coloring_exists(g, *parts);
	if (coloring && !is_good_coloring(g, *parts, *coloring))
		throw std::logic_error("good_coloring_exists returned an invalid coloring");
	r.has_good_coloring = coloring.has_value();
	if (!r.agree())
		throw EquivalenceViolation("co-bipartite equivalence split");
	return r;
}

} // namespace opo
