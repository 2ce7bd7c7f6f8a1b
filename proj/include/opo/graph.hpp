#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace opo {

using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge
{
	Vertex u = 0;
	Vertex v = 0;

	Edge() = default;
	Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

	friend auto operator<=>(const Edge &, const Edge &) = default;
};

// Directed arc tail -> head.
struct Arc
{
	Vertex tail = 0;
	Vertex head = 0;

	friend auto operator<=>(const Arc &, const Arc &) = default;
};

class GraphError : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

// Bit row helpers shared by Graph and Orientation.
namespace bits {

inline int words_for(int n) { return (n + 63) / 64; }

inline bool test(const std::uint64_t *row, int i)
{
	return (row[i >> 6] >> (i & 63)) & 1u;
}
inline void set(std::uint64_t *row, int i) { row[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void reset(std::uint64_t *row, int i) { row[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

// Calls f(i) for every set bit, ascending.
template <class F>
void for_each(const std::uint64_t *row, int words, F &&f)
{
	for (int w = 0; w < words; ++w) {
		std::uint64_t x = row[w];
		while (x) {
			int b = __builtin_ctzll(x);
			f(w * 64 + b);
			x &= x - 1;
		}
	}
}

inline int count(const std::uint64_t *row, int words)
{
	int c = 0;
	for (int w = 0; w < words; ++w)
		c += __builtin_popcountll(row[w]);
	return c;
}

} // namespace bits

// Finite simple undirected graph on vertices 0..n-1, stored as an
// adjacency bit matrix.
class Graph
{
  public:
	Graph() = default;
	explicit Graph(int n);
	Graph(int n, std::span<const Edge> edges);
	Graph(int n, std::initializer_list<Edge> edges)
	    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
	{}

	int order() const { return n_; }
	int size() const { return m_; }
	int words() const { return words_; }

	bool adjacent(Vertex u, Vertex v) const
	{
		return bits::test(row(u), v);
	}
	const std::uint64_t *row(Vertex v) const { return adj_.data() + std::size_t(v) * words_; }

	int degree(Vertex v) const { return bits::count(row(v), words_); }
	std::vector<Vertex> neighbors(Vertex v) const;
	// Sorted lexicographically; index in this list is the canonical edge index.
	std::vector<Edge> edges() const;

	bool contains(Vertex v) const { return v >= 0 && v < n_; }
	bool is_clique(std::span<const Vertex> s) const;
	bool is_independent(std::span<const Vertex> s) const;
	bool is_complete() const { return m_ == n_ * (n_ - 1) / 2; }
	bool is_connected() const;

	// Adds uv; throws on self-loop, bad label, or an existing edge.
	void add_edge(Vertex u, Vertex v);
	void remove_edge(Vertex u, Vertex v);

	// Induced subgraph; vertex keep[i] becomes i.
	Graph induced(std::span<const Vertex> keep) const;

	friend bool operator==(const Graph &a, const Graph &b)
	{
		return a.n_ == b.n_ && a.adj_ == b.adj_;
	}

  private:
	std::uint64_t *row_mut(Vertex v) { return adj_.data() + std::size_t(v) * words_; }
	void check_vertex(Vertex v) const;

	int n_ = 0;
	int m_ = 0;
	int words_ = 0;
	std::vector<std::uint64_t> adj_;
};

// A 2-branch (a,b,c): path with deg(b) = 2 and deg(c) = 1, rooted at a.
struct Branch2
{
	Vertex a = 0;
	Vertex b = 0;
	Vertex c = 0;
};

bool is_2branch(const Graph &g, const Branch2 &br);
std::vector<Branch2> find_2branches(const Graph &g);

// Named graphs.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);

// Construction operators. All are pure.
Graph complement(const Graph &g);
Graph delete_vertex(const Graph &g, Vertex v);
// Merged vertex takes label min(u,v); labels above max(u,v) shift down by one.
Graph contract_edge(const Graph &g, Edge e);
Graph co_contract_nonedge(const Graph &g, Vertex u, Vertex v);
Graph disjoint_union(const Graph &a, const Graph &b);
Graph join(const Graph &a, const Graph &b);
Graph add_true_twin(const Graph &g, Vertex w);
Graph add_simplicial(const Graph &g, std::span<const Vertex> clique);
Graph add_universal(const Graph &g);
// New vertices b' = n and c' = n+1.
Graph duplicate_2branch(const Graph &g, const Branch2 &br);

// Label of x after identifying u and v (u != v) as contract_edge does.
Vertex merged_label(Vertex x, Vertex u, Vertex v);

// Chordless cycles of length >= min_len, each once up to rotation and
// reflection. Each cycle starts at its smallest vertex, second vertex is
// smaller than the last.
std::vector<std::vector<Vertex>> enumerate_chordless_cycles(const Graph &g, int min_len);

// Orientation of a graph: exactly one arc per edge.
class Orientation
{
  public:
	Orientation() = default;
	explicit Orientation(Graph base, std::span<const Arc> arcs);
	// Bit i refers to edges()[i] = {u,v}, u < v: true means u -> v.
	static Orientation from_edge_bits(Graph base, const std::vector<bool> &low_to_high);
	static Orientation from_mask(Graph base, std::uint64_t mask);

	const Graph &base() const { return base_; }
	int order() const { return base_.order(); }

	bool has_arc(Vertex from, Vertex to) const { return bits::test(out_row(from), to); }
	const std::uint64_t *out_row(Vertex v) const
	{
		return out_.data() + std::size_t(v) * base_.words();
	}
	std::vector<Vertex> out_neighbors(Vertex v) const;
	std::vector<Vertex> in_neighbors(Vertex v) const;
	int out_degree(Vertex v) const { return bits::count(out_row(v), base_.words()); }
	int in_degree(Vertex v) const { return base_.degree(v) - out_degree(v); }
	// Sorted by tail then head.
	std::vector<Arc> arcs() const;

	friend bool operator==(const Orientation &a, const Orientation &b)
	{
		return a.base_ == b.base_ && a.out_ == b.out_;
	}

  private:
	Graph base_;
	std::vector<std::uint64_t> out_;
};

} // namespace opo
