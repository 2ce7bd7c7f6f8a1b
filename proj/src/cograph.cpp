#include "opo/cograph.hpp"

#include <algorithm>
#include <map>

namespace opo {

std::vector<Vertex> Cotree::vertices() const
{
	if (kind == Kind::Leaf)
		return {vertex};
	std::vector<Vertex> out;
	for (const Cotree &c : children)
		for (Vertex v : c.vertices())
			out.push_back(v);
	return out;
}

std::string Cotree::to_sexpr() const
{
	if (kind == Kind::Leaf)
		return std::to_string(vertex);
	std::string out = kind == Kind::Union ? "(union" : "(join";
	for (const Cotree &c : children)
		out += " " + c.to_sexpr();
	return out + ")";
}

namespace {

// Connected components of g[s] (complemented when `co`), as label lists.
std::vector<std::vector<Vertex>> components(const Graph &g, const std::vector<Vertex> &s, bool co)
{
	std::vector<std::vector<Vertex>> out;
	std::vector<char> seen(s.size(), 0);
	for (std::size_t i = 0; i < s.size(); ++i) {
		if (seen[i])
			continue;
		seen[i] = 1;
		std::vector<std::size_t> queue{i};
		for (std::size_t qi = 0; qi < queue.size(); ++qi) {
			Vertex v = s[queue[qi]];
			for (std::size_t j = 0; j < s.size(); ++j)
				if (!seen[j] && s[j] != v && g.adjacent(v, s[j]) != co) {
					seen[j] = 1;
					queue.push_back(j);
				}
		}
		std::vector<Vertex> comp;
		for (std::size_t k : queue)
			comp.push_back(s[k]);
		std::sort(comp.begin(), comp.end());
		out.push_back(std::move(comp));
	}
	return out;
}

std::optional<std::array<Vertex, 4>> find_p4(const Graph &g, const std::vector<Vertex> &s)
{
	std::vector<char> in(g.order(), 0);
	for (Vertex v : s)
		in[v] = 1;
	for (Vertex b : s)
		for (Vertex c : s) {
			if (b == c || !g.adjacent(b, c))
				continue;
			for (Vertex a : s) {
				if (a == c || !g.adjacent(a, b) || g.adjacent(a, c))
					continue;
				for (Vertex d : s)
					if (d != b && g.adjacent(c, d) && !g.adjacent(b, d) && !g.adjacent(a, d) && d != a)
						return std::array<Vertex, 4>{a, b, c, d};
			}
		}
	return std::nullopt;
}

struct Decomposer
{
	const Graph &g;
	std::optional<std::array<Vertex, 4>> p4;

	std::optional<Cotree> run(const std::vector<Vertex> &s)
	{
		if (s.size() == 1)
			return Cotree::leaf(s[0]);
		for (bool co : {false, true}) {
			auto parts = components(g, s, co);
			if (parts.size() < 2)
				continue;
			Cotree node{co ? Cotree::Kind::Join : Cotree::Kind::Union, -1, {}};
			for (const auto &p : parts) {
				auto child = run(p);
				if (!child)
					return std::nullopt;
				node.children.push_back(std::move(*child));
			}
			return node;
		}
		p4 = find_p4(g, s);
		return std::nullopt;
	}
};

std::vector<Vertex> all_vertices(int n)
{
	std::vector<Vertex> s(n);
	for (int i = 0; i < n; ++i)
		s[i] = i;
	return s;
}

} // namespace

CotreeResult build_cotree(const Graph &g)
{
	if (g.order() == 0)
		return {};
	Decomposer dec{g, std::nullopt};
	CotreeResult r;
	r.cotree = dec.run(all_vertices(g.order()));
	if (!r.cotree)
		r.p4 = dec.p4;
	return r;
}

bool is_cograph(const Graph &g) { return g.order() == 0 || build_cotree(g).cotree.has_value(); }

Graph rebuild(const Cotree &t, int n)
{
	Graph g(n);
	auto walk = [&](auto &&self, const Cotree &node) -> void {
		if (node.kind == Cotree::Kind::Leaf)
			return;
		for (const Cotree &c : node.children)
			self(self, c);
		if (node.kind == Cotree::Kind::Join)
			for (std::size_t i = 0; i < node.children.size(); ++i)
				for (std::size_t j = i + 1; j < node.children.size(); ++j)
					for (Vertex x : node.children[i].vertices())
						for (Vertex y : node.children[j].vertices())
							g.add_edge(x, y);
	};
	walk(walk, t);
	return g;
}

namespace {

// Memoised evaluation of the structural recursion on vertex subsets.
class Structural
{
  public:
	explicit Structural(const Graph &g) : g_(g) {}

	bool holds(const std::vector<Vertex> &s)
	{
		auto key = s;
		if (auto it = memo_.find(key); it != memo_.end())
			return it->second;
		bool r = evaluate(s);
		memo_.emplace(std::move(key), r);
		return r;
	}

  private:
	static std::vector<Vertex> without(const std::vector<Vertex> &s, Vertex x)
	{
		std::vector<Vertex> out;
		for (Vertex v : s)
			if (v != x)
				out.push_back(v);
		return out;
	}

	bool evaluate(const std::vector<Vertex> &s)
	{
		if (s.size() == 1)
			return true;
		Graph sub = g_.induced(s);
		auto tree = build_cotree(sub).cotree;
		if (!tree)
			throw NotACograph("cograph_is_1po_structural: graph is not a cograph");

		if (tree->kind == Cotree::Kind::Join) {
			// Complement of mK2: every co-component is 2K1.
			bool matching = tree->children.size() >= 2;
			for (const Cotree &c : tree->children)
				matching = matching && c.kind == Cotree::Kind::Union && c.children.size() == 2 &&
				           c.children[0].kind == Cotree::Kind::Leaf &&
				           c.children[1].kind == Cotree::Kind::Leaf;
			if (matching)
				return true;
			// Universal vertices are the leaf children of the root join;
			// removing any of them gives the same graph up to isomorphism.
			for (const Cotree &c : tree->children)
				if (c.kind == Cotree::Kind::Leaf) {
					if (holds(without(s, s[c.vertex])))
						return true;
					break;
				}
		}

		if (tree->kind == Cotree::Kind::Union) {
			// Disjoint union of two smaller graphs with the property.
			std::vector<std::vector<Vertex>> comps;
			for (const Cotree &c : tree->children) {
				std::vector<Vertex> comp;
				for (Vertex v : c.vertices())
					comp.push_back(s[v]);
				std::sort(comp.begin(), comp.end());
				comps.push_back(std::move(comp));
			}
			const std::size_t k = comps.size();
			const std::size_t limit = k <= 12 ? (std::size_t{1} << (k - 1)) : 2;
			for (std::size_t mask = 1; mask < limit; ++mask) {
				std::vector<Vertex> left, right;
				for (std::size_t i = 0; i < k; ++i) {
					auto &dst = (k <= 12 ? (mask >> i) & 1u : i == 0) ? left : right;
					dst.insert(dst.end(), comps[i].begin(), comps[i].end());
				}
				std::sort(left.begin(), left.end());
				std::sort(right.begin(), right.end());
				if (holds(left) && holds(right))
					return true;
			}
		}

		// True twins: drop one member of each twin class.
		const int n = sub.order();
		std::vector<char> done(n, 0);
		for (Vertex x = 0; x < n; ++x) {
			if (done[x])
				continue;
			for (Vertex y = x + 1; y < n; ++y) {
				if (!sub.adjacent(x, y))
					continue;
				bool twins = true;
				for (Vertex z = 0; z < n && twins; ++z)
					if (z != x && z != y && sub.adjacent(x, z) != sub.adjacent(y, z))
						twins = false;
				if (twins) {
					done[y] = 1;
					if (holds(without(s, s[y])))
						return true;
					break;
				}
			}
		}
		return false;
	}

	const Graph &g_;
	std::map<std::vector<Vertex>, bool> memo_;
};

} // namespace

bool cograph_is_1po_structural(const Graph &g)
{
	if (g.order() == 0)
		throw NotACograph("cograph_is_1po_structural: empty graph");
	if (!is_cograph(g))
		throw NotACograph("cograph_is_1po_structural: graph is not a cograph");
	Structural eval(g);
	return eval.holds(all_vertices(g.order()));
}

std::optional<std::array<Vertex, 5>> contains_k23(const Graph &g)
{
	const int n = g.order();
	for (Vertex a1 = 0; a1 < n; ++a1)
		for (Vertex a2 = a1 + 1; a2 < n; ++a2) {
			if (g.adjacent(a1, a2))
				continue;
			std::vector<Vertex> common;
			for (Vertex x = 0; x < n; ++x)
				if (g.adjacent(a1, x) && g.adjacent(a2, x))
					common.push_back(x);
			const std::size_t c = common.size();
			for (std::size_t i = 0; i < c; ++i)
				for (std::size_t j = i + 1; j < c; ++j) {
					if (g.adjacent(common[i], common[j]))
						continue;
					for (std::size_t k = j + 1; k < c; ++k)
						if (!g.adjacent(common[i], common[k]) && !g.adjacent(common[j], common[k]))
							return std::array<Vertex, 5>{a1, a2, common[i], common[j], common[k]};
				}
		}
	return std::nullopt;
}

} // namespace opo
