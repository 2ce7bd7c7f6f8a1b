#include "support.hpp"

#include "opo/canonical.hpp"
#include "opo/io.hpp"
#include "opo/recognition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace opo::test {

void for_each_labeled_graph(int n, const std::function<void(const Graph &)> &visit)
{
	std::vector<Edge> pairs;
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			pairs.emplace_back(u, v);
	const std::uint64_t total = std::uint64_t{1} << pairs.size();
	for (std::uint64_t mask = 0; mask < total; ++mask) {
		Graph g(n);
		for (std::size_t i = 0; i < pairs.size(); ++i)
			if ((mask >> i) & 1)
				g.add_edge(pairs[i].u, pairs[i].v);
		visit(g);
	}
}

const std::vector<Graph> &graph_representatives(int n)
{
	static std::map<int, std::vector<Graph>> cache;
	if (auto it = cache.find(n); it != cache.end())
		return it->second;
	std::vector<Graph> out;
	if (n <= 1) {
		out.push_back(Graph(std::max(n, 0)));
	} else {
		std::set<std::string> seen;
		for (const Graph &g : graph_representatives(n - 1))
			for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
				Graph h(n);
				for (const Edge &e : g.edges())
					h.add_edge(e.u, e.v);
				for (Vertex v = 0; v < n - 1; ++v)
					if ((nb >> v) & 1)
						h.add_edge(v, n - 1);
				Graph c = canonical_form(h);
				if (seen.insert(to_graph6(c)).second)
					out.push_back(std::move(c));
			}
	}
	return cache[n] = std::move(out);
}

const std::vector<Graph> &cograph_representatives(int n)
{
	static std::map<int, std::vector<Graph>> cache;
	if (auto it = cache.find(n); it != cache.end())
		return it->second;
	std::vector<Graph> out;
	if (n == 1) {
		out.push_back(Graph(1));
	} else {
		std::set<std::string> seen;
		for (int i = 1; i <= n / 2; ++i)
			for (const Graph &a : cograph_representatives(i))
				for (const Graph &b : cograph_representatives(n - i))
					for (const Graph &h : {disjoint_union(a, b), join(a, b)}) {
						Graph c = canonical_form(h);
						if (seen.insert(to_graph6(c)).second)
							out.push_back(std::move(c));
					}
	}
	return cache[n] = std::move(out);
}

void for_each_fixed_bipartite(int n, const std::function<void(const Graph &)> &visit)
{
	for (int p = 0; p <= n / 2; ++p) {
		const int cross = p * (n - p);
		for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cross); ++mask) {
			Graph g(n);
			for (int i = 0; i < cross; ++i)
				if ((mask >> i) & 1)
					g.add_edge(i / (n - p), p + i % (n - p));
			visit(g);
		}
	}
}

Graph random_graph(int n, double p, std::mt19937_64 &rng)
{
	std::bernoulli_distribution coin(p);
	Graph g(n);
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			if (coin(rng))
				g.add_edge(u, v);
	return g;
}

std::vector<Vertex> random_permutation(int n, std::mt19937_64 &rng)
{
	std::vector<Vertex> p(n);
	std::iota(p.begin(), p.end(), 0);
	std::shuffle(p.begin(), p.end(), rng);
	return p;
}

Graph random_1po_graph(int lo, int hi, std::mt19937_64 &rng)
{
	std::uniform_int_distribution<int> order(lo, hi);
	std::uniform_real_distribution<double> density(0.1, 0.9);
	for (;;) {
		Graph g = random_graph(order(rng), density(rng), rng);
		if (is_1po(g))
			return g;
	}
}

std::vector<int> random_path_orders(int n, std::mt19937_64 &rng)
{
	std::vector<int> parts;
	while (n > 0) {
		std::uniform_int_distribution<int> take(1, n);
		int k = take(rng);
		parts.push_back(k);
		n -= k;
	}
	return parts;
}

} // namespace opo::test
