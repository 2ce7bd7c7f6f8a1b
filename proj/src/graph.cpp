#include "opo/graph.hpp"

#include <algorithm>
#include <string>

namespace opo {

Graph::Graph(int n) : n_(n), words_(bits::words_for(n))
{
	if (n < 0)
		throw GraphError("negative vertex count");
	adj_.assign(std::size_t(n) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
	for (const Edge &e : edges)
		add_edge(e.u, e.v);
}

void Graph::check_vertex(Vertex v) const
{
	if (!contains(v))
		throw GraphError("vertex " + std::to_string(v) + " out of range [0," +
		                 std::to_string(n_) + ")");
}

void Graph::add_edge(Vertex u, Vertex v)
{
	check_vertex(u);
	check_vertex(v);
	if (u == v)
		throw GraphError("self-loop at vertex " + std::to_string(u));
	if (adjacent(u, v))
		throw GraphError("duplicate edge " + std::to_string(std::min(u, v)) + " " +
		                 std::to_string(std::max(u, v)));
	bits::set(row_mut(u), v);
	bits::set(row_mut(v), u);
	++m_;
}

void Graph::remove_edge(Vertex u, Vertex v)
{
	check_vertex(u);
	check_vertex(v);
	if (u == v || !adjacent(u, v))
		throw GraphError("not an edge");
	bits::reset(row_mut(u), v);
	bits::reset(row_mut(v), u);
	--m_;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
	std::vector<Vertex> out;
	bits::for_each(row(v), words_, [&](int u) { out.push_back(u); });
	return out;
}

std::vector<Edge> Graph::edges() const
{
	std::vector<Edge> out;
	out.reserve(m_);
	for (Vertex u = 0; u < n_; ++u)
		bits::for_each(row(u), words_, [&](int v) {
			if (v > u)
				out.emplace_back(u, v);
		});
	return out;
}

bool Graph::is_clique(std::span<const Vertex> s) const
{
	for (std::size_t i = 0; i < s.size(); ++i)
		for (std::size_t j = i + 1; j < s.size(); ++j)
			if (s[i] == s[j] || !adjacent(s[i], s[j]))
				return false;
	return true;
}

bool Graph::is_independent(std::span<const Vertex> s) const
{
	for (std::size_t i = 0; i < s.size(); ++i)
		for (std::size_t j = i + 1; j < s.size(); ++j)
			if (adjacent(s[i], s[j]))
				return false;
	return true;
}

bool Graph::is_connected() const
{
	if (n_ <= 1)
		return true;
	std::vector<char> seen(n_, 0);
	std::vector<Vertex> stack{0};
	seen[0] = 1;
	int reached = 1;
	while (!stack.empty()) {
		Vertex v = stack.back();
		stack.pop_back();
		bits::for_each(row(v), words_, [&](int u) {
			if (!seen[u]) {
				seen[u] = 1;
				++reached;
				stack.push_back(u);
			}
		});
	}
	return reached == n_;
}

Graph Graph::induced(std::span<const Vertex> keep) const
{
	Graph h(static_cast<int>(keep.size()));
	for (std::size_t i = 0; i < keep.size(); ++i) {
		check_vertex(keep[i]);
		for (std::size_t j = i + 1; j < keep.size(); ++j)
			if (adjacent(keep[i], keep[j]))
				h.add_edge(int(i), int(j));
	}
	return h;
}

bool is_2branch(const Graph &g, const Branch2 &br)
{
	auto [a, b, c] = br;
	if (!g.contains(a) || !g.contains(b) || !g.contains(c) || a == b || b == c || a == c)
		return false;
	return g.adjacent(a, b) && g.adjacent(b, c) && !g.adjacent(a, c) && g.degree(b) == 2 &&
	       g.degree(c) == 1;
}

std::vector<Branch2> find_2branches(const Graph &g)
{
	std::vector<Branch2> out;
	for (Vertex c = 0; c < g.order(); ++c) {
		if (g.degree(c) != 1)
			continue;
		Vertex b = g.neighbors(c).front();
		if (g.degree(b) != 2)
			continue;
		for (Vertex a : g.neighbors(b))
			if (a != c)
				out.push_back({a, b, c});
	}
	return out;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n)
{
	Graph g(n);
	for (int u = 0; u < n; ++u)
		for (int v = u + 1; v < n; ++v)
			g.add_edge(u, v);
	return g;
}

Graph path_graph(int n)
{
	Graph g(n);
	for (int i = 0; i + 1 < n; ++i)
		g.add_edge(i, i + 1);
	return g;
}

Graph cycle_graph(int n)
{
	if (n < 3)
		throw GraphError("cycle needs at least 3 vertices");
	Graph g = path_graph(n);
	g.add_edge(0, n - 1);
	return g;
}

Graph complete_bipartite(int a, int b)
{
	Graph g(a + b);
	for (int u = 0; u < a; ++u)
		for (int v = a; v < a + b; ++v)
			g.add_edge(u, v);
	return g;
}

Graph complement(const Graph &g)
{
	Graph h(g.order());
	for (Vertex u = 0; u < g.order(); ++u)
		for (Vertex v = u + 1; v < g.order(); ++v)
			if (!g.adjacent(u, v))
				h.add_edge(u, v);
	return h;
}

Graph delete_vertex(const Graph &g, Vertex v)
{
	if (!g.contains(v))
		throw GraphError("vertex " + std::to_string(v) + " out of range");
	std::vector<Vertex> keep;
	for (Vertex x = 0; x < g.order(); ++x)
		if (x != v)
			keep.push_back(x);
	return g.induced(keep);
}

Vertex merged_label(Vertex x, Vertex u, Vertex v)
{
	Vertex lo = std::min(u, v), hi = std::max(u, v);
	if (x == hi)
		return lo;
	return x > hi ? x - 1 : x;
}

namespace {

// Identifies u and v; the merged vertex is adjacent to `nbrs`.
Graph identify(const Graph &g, Vertex u, Vertex v, const std::vector<Vertex> &nbrs)
{
	Graph h(g.order() - 1);
	for (const Edge &e : g.edges()) {
		if (e.u == u || e.u == v || e.v == u || e.v == v)
			continue;
		h.add_edge(merged_label(e.u, u, v), merged_label(e.v, u, v));
	}
	Vertex w = std::min(u, v);
	for (Vertex x : nbrs)
		h.add_edge(w, merged_label(x, u, v));
	return h;
}

} // namespace

Graph contract_edge(const Graph &g, Edge e)
{
	if (!g.contains(e.u) || !g.contains(e.v) || e.u == e.v || !g.adjacent(e.u, e.v))
		throw GraphError("contract_edge: not an edge");
	std::vector<Vertex> nbrs;
	for (Vertex x = 0; x < g.order(); ++x)
		if (x != e.u && x != e.v && (g.adjacent(x, e.u) || g.adjacent(x, e.v)))
			nbrs.push_back(x);
	return identify(g, e.u, e.v, nbrs);
}

Graph co_contract_nonedge(const Graph &g, Vertex u, Vertex v)
{
	if (!g.contains(u) || !g.contains(v) || u == v || g.adjacent(u, v))
		throw GraphError("co_contract_nonedge: pair is an edge or invalid");
	std::vector<Vertex> nbrs;
	for (Vertex x = 0; x < g.order(); ++x)
		if (x != u && x != v && g.adjacent(x, u) && g.adjacent(x, v))
			nbrs.push_back(x);
	return identify(g, u, v, nbrs);
}

Graph disjoint_union(const Graph &a, const Graph &b)
{
	Graph h(a.order() + b.order());
	for (const Edge &e : a.edges())
		h.add_edge(e.u, e.v);
	for (const Edge &e : b.edges())
		h.add_edge(e.u + a.order(), e.v + a.order());
	return h;
}

Graph join(const Graph &a, const Graph &b)
{
	Graph h = disjoint_union(a, b);
	for (Vertex u = 0; u < a.order(); ++u)
		for (Vertex v = 0; v < b.order(); ++v)
			h.add_edge(u, a.order() + v);
	return h;
}

namespace {

Graph with_new_vertex(const Graph &g, std::span<const Vertex> nbrs)
{
	Graph h(g.order() + 1);
	for (const Edge &e : g.edges())
		h.add_edge(e.u, e.v);
	for (Vertex x : nbrs)
		h.add_edge(g.order(), x);
	return h;
}

} // namespace

Graph add_true_twin(const Graph &g, Vertex w)
{
	if (!g.contains(w))
		throw GraphError("add_true_twin: vertex out of range");
	std::vector<Vertex> nbrs = g.neighbors(w);
	nbrs.push_back(w);
	return with_new_vertex(g, nbrs);
}

Graph add_simplicial(const Graph &g, std::span<const Vertex> clique)
{
	for (Vertex x : clique)
		if (!g.contains(x))
			throw GraphError("add_simplicial: vertex out of range");
	if (!g.is_clique(clique))
		throw GraphError("add_simplicial: set is not a clique");
	return with_new_vertex(g, clique);
}

Graph add_universal(const Graph &g)
{
	std::vector<Vertex> all(g.order());
	for (int i = 0; i < g.order(); ++i)
		all[i] = i;
	return with_new_vertex(g, all);
}

Graph duplicate_2branch(const Graph &g, const Branch2 &br)
{
	if (!is_2branch(g, br))
		throw GraphError("duplicate_2branch: not a 2-branch");
	int n = g.order();
	Graph h(n + 2);
	for (const Edge &e : g.edges())
		h.add_edge(e.u, e.v);
	h.add_edge(br.a, n);
	h.add_edge(n, n + 1);
	return h;
}

std::vector<std::vector<Vertex>> enumerate_chordless_cycles(const Graph &g, int min_len)
{
	if (min_len < 3)
		throw GraphError("enumerate_chordless_cycles: min_len must be >= 3");
	std::vector<std::vector<Vertex>> out;
	int n = g.order();
	std::vector<Vertex> path;
	auto ok_to_add = [&](Vertex x) {
		// Only the current end and (when closing) the start may touch x.
		for (std::size_t i = 1; i + 1 < path.size(); ++i)
			if (g.adjacent(x, path[i]))
				return false;
		return true;
	};
	std::vector<char> on_path(n, 0);
	auto dfs = [&](auto &&self) -> void {
		Vertex s = path.front();
		Vertex last = path.back();
		for (Vertex x : g.neighbors(last)) {
			if (x <= s || on_path[x] || !ok_to_add(x))
				continue;
			if (g.adjacent(x, s)) {
				if (path.size() >= 2 && int(path.size()) + 1 >= min_len && path[1] < x) {
					path.push_back(x);
					out.push_back(path);
					path.pop_back();
				}
				continue;
			}
			path.push_back(x);
			on_path[x] = 1;
			self(self);
			on_path[x] = 0;
			path.pop_back();
		}
	};
	for (Vertex s = 0; s < n; ++s) {
		path = {s};
		on_path[s] = 1;
		for (Vertex a : g.neighbors(s)) {
			if (a <= s)
				continue;
			path.push_back(a);
			on_path[a] = 1;
			dfs(dfs);
			on_path[a] = 0;
			path.pop_back();
		}
		on_path[s] = 0;
	}
	return out;
}

Orientation::Orientation(Graph base, std::span<const Arc> arcs)
    : base_(std::move(base)), out_(std::size_t(base_.order()) * base_.words(), 0)
{
	if (int(arcs.size()) != base_.size())
		throw GraphError("orientation must have exactly one arc per edge");
	for (const Arc &a : arcs) {
		if (!base_.contains(a.tail) || !base_.contains(a.head) || a.tail == a.head ||
		    !base_.adjacent(a.tail, a.head))
			throw GraphError("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
			                 " is not an edge of the base graph");
		if (has_arc(a.tail, a.head) || has_arc(a.head, a.tail))
			throw GraphError("edge oriented twice");
		bits::set(out_.data() + std::size_t(a.tail) * base_.words(), a.head);
	}
}

Orientation Orientation::from_edge_bits(Graph base, const std::vector<bool> &low_to_high)
{
	std::vector<Edge> es = base.edges();
	if (es.size() != low_to_high.size())
		throw GraphError("edge bit count does not match edge count");
	std::vector<Arc> arcs;
	arcs.reserve(es.size());
	for (std::size_t i = 0; i < es.size(); ++i)
		arcs.push_back(low_to_high[i] ? Arc{es[i].u, es[i].v} : Arc{es[i].v, es[i].u});
	return Orientation(std::move(base), arcs);
}

Orientation Orientation::from_mask(Graph base, std::uint64_t mask)
{
	std::vector<bool> b(base.size());
	for (int i = 0; i < base.size(); ++i)
		b[i] = (mask >> i) & 1u;
	return from_edge_bits(std::move(base), b);
}

std::vector<Vertex> Orientation::out_neighbors(Vertex v) const
{
	std::vector<Vertex> out;
	bits::for_each(out_row(v), base_.words(), [&](int u) { out.push_back(u); });
	return out;
}

std::vector<Vertex> Orientation::in_neighbors(Vertex v) const
{
	std::vector<Vertex> out;
	bits::for_each(base_.row(v), base_.words(), [&](int u) {
		if (!has_arc(v, u))
			out.push_back(u);
	});
	return out;
}

std::vector<Arc> Orientation::arcs() const
{
	std::vector<Arc> out;
	for (Vertex v = 0; v < order(); ++v)
		bits::for_each(out_row(v), base_.words(), [&](int u) { out.push_back({v, u}); });
	return out;
}

} // namespace opo
