#include "opo/transforms.hpp"

#include "opo/oracle.hpp"
#include "opo/recognition.hpp"

#include <algorithm>

namespace opo {

namespace {

void require_1perfect(const Orientation &d, const char *who)
{
	if (!verify_1perfect(d))
		throw NotOnePerfect(std::string(who) + ": input orientation is not 1-perfect");
}

Orientation checked(Orientation d, const char *who)
{
	if (!verify_1perfect(d))
		throw std::logic_error(std::string(who) + ": transferred orientation is not 1-perfect");
	return d;
}

std::vector<Arc> shifted_arcs(const Orientation &d, int offset)
{
	std::vector<Arc> arcs = d.arcs();
	for (Arc &a : arcs) {
		a.tail += offset;
		a.head += offset;
	}
	return arcs;
}

// Orientation of base whose arcs are the images of d's arcs under map.
Orientation relabeled(const Orientation &d, const std::vector<Vertex> &map, const Graph &base)
{
	std::vector<Arc> arcs = d.arcs();
	for (Arc &a : arcs)
		a = {map[a.tail], map[a.head]};
	return Orientation(base, arcs);
}

} // namespace

Orientation orient_disjoint_union(const Orientation &d1, const Orientation &d2)
{
	require_1perfect(d1, "orient_disjoint_union");
	require_1perfect(d2, "orient_disjoint_union");
	std::vector<Arc> arcs = d1.arcs();
	for (const Arc &a : shifted_arcs(d2, d1.order()))
		arcs.push_back(a);
	return checked(Orientation(disjoint_union(d1.base(), d2.base()), arcs), "orient_disjoint_union");
}

Orientation orient_add_universal(const Orientation &d)
{
	require_1perfect(d, "orient_add_universal");
	const Vertex fresh = d.order();
	std::vector<Arc> arcs = d.arcs();
	for (Vertex x = 0; x < fresh; ++x)
		arcs.push_back({x, fresh});
	return checked(Orientation(add_universal(d.base()), arcs), "orient_add_universal");
}

Orientation orient_add_true_twin(const Orientation &d, Vertex w)
{
	require_1perfect(d, "orient_add_true_twin");
	if (!d.base().contains(w))
		throw std::invalid_argument("orient_add_true_twin: vertex out of range");
	const Vertex twin = d.order();
	std::vector<Arc> arcs = d.arcs();
	for (Vertex u : d.out_neighbors(w))
		arcs.push_back({twin, u});
	for (Vertex u : d.in_neighbors(w))
		arcs.push_back({u, twin});
	arcs.push_back({w, twin});
	return checked(Orientation(add_true_twin(d.base(), w), arcs), "orient_add_true_twin");
}

Orientation orient_add_simplicial(const Orientation &d, std::span<const Vertex> clique)
{
	require_1perfect(d, "orient_add_simplicial");
	Graph g = add_simplicial(d.base(), clique);
	const Vertex fresh = d.order();
	std::vector<Arc> arcs = d.arcs();
	for (Vertex x : clique)
		arcs.push_back({fresh, x});
	return checked(Orientation(std::move(g), arcs), "orient_add_simplicial");
}

Branch2Duplication duplicate_2branch_in_complement(const Graph &g, const Branch2 &br)
{
	const Graph co = complement(g);
	if (!is_2branch(co, br))
		throw std::invalid_argument("duplicate_2branch_in_complement: not a 2-branch of the complement");
	auto d = recognize(g);
	if (!d)
		throw NotOnePerfect("duplicate_2branch_in_complement: graph is not 1-perfectly orientable");

	const int n = g.order();
	const auto [a, b, c] = br;
	const Vertex b2 = n, c2 = n + 1;

	// Cliques of g are independent sets of the complement.
	IndependentSystem sys;
	sys.sets = cover_from_orientation(*d).sets;
	for (auto &s : sys.sets) {
		for (Vertex x = 0; x < n; ++x) {
			if (std::find(s.begin(), s.end(), x) != s.end())
				continue;
			bool free = std::none_of(s.begin(), s.end(), [&](Vertex y) { return co.adjacent(x, y); });
			if (free)
				s.push_back(x);
		}
		std::sort(s.begin(), s.end());
		bool has_b = std::binary_search(s.begin(), s.end(), b);
		bool has_c = std::binary_search(s.begin(), s.end(), c);
		if (has_b == has_c)
			throw std::logic_error("maximal independent set holds both or neither of b, c");
	}

	Graph h = complement(duplicate_2branch(co, br));
	EdgeCliqueCover cover;
	cover.sets.resize(n + 2);
	for (Vertex k = 0; k < n; ++k) {
		cover.sets[k] = sys.sets[k];
		cover.sets[k].push_back(sys.contains(k, b) ? b2 : c2);
	}
	for (Vertex x : sys.sets[b])
		if (x != b)
			cover.sets[b2].push_back(x);
	cover.sets[b2].push_back(c);
	cover.sets[b2].push_back(b2);
	for (Vertex x : sys.sets[c])
		if (x != a && x != c)
			cover.sets[c2].push_back(x);
	cover.sets[c2].push_back(b);
	cover.sets[c2].push_back(c2);
	for (auto &s : cover.sets) {
		std::sort(s.begin(), s.end());
		s.erase(std::unique(s.begin(), s.end()), s.end());
	}

	Orientation dh = checked(orientation_from_cover(h, cover), "duplicate_2branch_in_complement");
	return {std::move(h), std::move(sys), std::move(cover), std::move(dh)};
}

Orientation orient_contract_edge(const Orientation &d, Edge e)
{
	require_1perfect(d, "orient_contract_edge");
	const Graph &g = d.base();
	if (!g.contains(e.u) || !g.contains(e.v) || e.u == e.v || !g.adjacent(e.u, e.v))
		throw std::invalid_argument("orient_contract_edge: not an edge");
	const Vertex u = d.has_arc(e.u, e.v) ? e.u : e.v;
	const Vertex v = u == e.u ? e.v : e.u;
	Graph contracted = contract_edge(g, e);
	const Vertex w = std::min(u, v);

	std::vector<Arc> arcs;
	for (const Arc &a : d.arcs()) {
		bool touches_u = a.tail == u || a.head == u;
		bool touches_v = a.tail == v || a.head == v;
		if (!touches_u && !touches_v)
			arcs.push_back({merged_label(a.tail, u, v), merged_label(a.head, u, v)});
	}
	for (Vertex x = 0; x < g.order(); ++x) {
		if (x == u || x == v)
			continue;
		bool near_u = g.adjacent(x, u), near_v = g.adjacent(x, v);
		if (!near_u && !near_v)
			continue;
		Vertex xm = merged_label(x, u, v);
		// X: x in N(u) only, x -> w. Y, W: x -> v gives x -> w.
		// U, Z: v -> x gives w -> x.
		if (near_v && d.has_arc(v, x))
			arcs.push_back({w, xm});
		else
			arcs.push_back({xm, w});
	}
	return checked(Orientation(std::move(contracted), arcs), "orient_contract_edge");
}

std::optional<Orientation> orient_delete_vertex(const Graph &g, Vertex v)
{
	return recognize(delete_vertex(g, v));
}

Orientation orient_join(const Orientation &d1, const Orientation &d2, const CliqueBipartition &parts1,
                        const CliqueBipartition &parts2)
{
	require_1perfect(d1, "orient_join");
	require_1perfect(d2, "orient_join");
	if (!is_clique_bipartition(d1.base(), parts1) || !is_clique_bipartition(d2.base(), parts2))
		throw std::invalid_argument("orient_join: parts are not clique bipartitions");
	const int off = d1.order();
	std::vector<Arc> arcs = d1.arcs();
	for (const Arc &a : shifted_arcs(d2, off))
		arcs.push_back(a);
	const auto &a1 = parts1.u, &b1 = parts1.u_prime;
	const auto &a2 = parts2.u, &b2 = parts2.u_prime;
	for (Vertex x : a1)
		for (Vertex y : a2)
			arcs.push_back({x, y + off});
	for (Vertex x : b1)
		for (Vertex y : b2)
			arcs.push_back({x, y + off});
	for (Vertex y : a2)
		for (Vertex x : b1)
			arcs.push_back({y + off, x});
	for (Vertex y : b2)
		for (Vertex x : a1)
			arcs.push_back({y + off, x});
	return checked(Orientation(join(d1.base(), d2.base()), arcs), "orient_join");
}

Orientation orient_join(const Orientation &d1, const Orientation &d2)
{
	auto p1 = find_clique_bipartition(d1.base());
	auto p2 = find_clique_bipartition(d2.base());
	if (p1 && p2)
		return orient_join(d1, d2, *p1, *p2);

	// One side complete: add its vertices one by one as universal vertices
	// of the other side, then restore the join's labelling.
	const bool first_complete = d1.base().is_complete();
	if (!first_complete && !d2.base().is_complete())
		throw std::invalid_argument("orient_join: neither side complete and not both co-bipartite");
	const Orientation &rest = first_complete ? d2 : d1;
	const int k = first_complete ? d1.order() : d2.order();
	Orientation acc = rest;
	for (int i = 0; i < k; ++i)
		acc = orient_add_universal(acc);
	Graph target = join(d1.base(), d2.base());
	std::vector<Vertex> map(acc.order());
	for (Vertex x = 0; x < acc.order(); ++x) {
		if (first_complete)
			map[x] = x < rest.order() ? x + k : x - rest.order();
		else
			map[x] = x;
	}
	return checked(relabeled(acc, map, target), "orient_join");
}

bool join_is_1po(const Graph &g1, const Graph &g2)
{
	bool p1 = is_1po(g1), p2 = is_1po(g2);
	if (g1.is_complete() && p2)
		return true;
	if (g2.is_complete() && p1)
		return true;
	return p1 && p2 && find_clique_bipartition(g1) && find_clique_bipartition(g2);
}

} // namespace opo
