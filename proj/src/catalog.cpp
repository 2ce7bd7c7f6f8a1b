#include "opo/catalog.hpp"

#include "opo/cobipartite.hpp"
#include "opo/io.hpp"
#include "opo/recognition.hpp"

#include <algorithm>

namespace opo {

namespace detail {
extern const std::string_view bundled_catalog_text;
}

Graph gen_f3(int k)
{
	if (k < 3)
		throw std::invalid_argument("gen_f3: k must be at least 3");
	return complement(cycle_graph(2 * k));
}

Graph gen_f4(int k)
{
	if (k < 1)
		throw std::invalid_argument("gen_f4: k must be at least 1");
	return complement(disjoint_union(complete_graph(2), cycle_graph(2 * k + 1)));
}

const std::vector<std::string> &bundled_names()
{
	static const std::vector<std::string> names{"F1", "F2", "F5", "F6",  "F7",
	                                            "F8", "F9", "F10", "F11", "F12"};
	return names;
}

std::string_view bundled_catalog_text() { return detail::bundled_catalog_text; }

std::map<std::string, Graph> parse_catalog(std::string_view text)
{
	std::map<std::string, Graph> out;
	std::string name;
	std::string body;
	std::size_t line_no = 0, block_line = 0;
	auto flush = [&] {
		if (name.empty())
			return;
		try {
			out[name] = parse_edge_list(body);
		} catch (const ParseError &e) {
			throw CatalogError("catalog entry [" + name + "] (block at line " +
			                   std::to_string(block_line) + "): " + e.what());
		}
	};
	while (!text.empty()) {
		++line_no;
		std::size_t nl = text.find('\n');
		std::string_view line = text.substr(0, nl);
		text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
		std::string_view trimmed = line;
		while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
			trimmed.remove_prefix(1);
		if (trimmed.starts_with('[')) {
			auto close = trimmed.find(']');
			if (close == std::string_view::npos)
				throw CatalogError("catalog: unterminated block name at line " + std::to_string(line_no));
			flush();
			name = std::string(trimmed.substr(1, close - 1));
			if (out.count(name))
				throw CatalogError("catalog: duplicate block [" + name + "]");
			body.clear();
			block_line = line_no;
			continue;
		}
		if (name.empty()) {
			if (!trimmed.empty() && !trimmed.starts_with('#'))
				throw CatalogError("catalog: content before first block at line " + std::to_string(line_no));
			continue;
		}
		body += line;
		body += '\n';
	}
	flush();
	return out;
}

namespace {

bool triangle_free(const Graph &g)
{
	for (const Edge &e : g.edges())
		for (Vertex w = e.v + 1; w < g.order(); ++w)
			if (g.adjacent(e.u, w) && g.adjacent(e.v, w))
				return false;
	return true;
}

int expected_order(std::string_view name)
{
	static const std::map<std::string, int, std::less<>> orders{
	    {"F5", 10}, {"F6", 10}, {"F7", 10}, {"F8", 10}, {"F9", 9}, {"F10", 10}, {"F11", 12}, {"F12", 12}};
	auto it = orders.find(name);
	return it == orders.end() ? -1 : it->second;
}

} // namespace

std::string validation_failure(const CatalogEntry &entry)
{
	const Graph &g = entry.graph;
	if (entry.name == "F1" || entry.name == "F2") {
		if (!triangle_free(g))
			return entry.name + " is not triangle-free";
		if (g.size() <= g.order())
			return entry.name + " does not have more edges than vertices";
	} else if (int n = expected_order(entry.name); n > 0) {
		if (g.order() != n)
			return entry.name + " has " + std::to_string(g.order()) + " vertices, expected " +
			       std::to_string(n);
		if (!find_clique_bipartition(g))
			return entry.name + " is not co-bipartite";
	} else {
		return "unknown bundled entry " + entry.name;
	}
	if (is_1po(g))
		return entry.name + " is 1-perfectly orientable";
	return {};
}

CatalogEntry load_bundled(std::string_view name, std::string_view catalog_text)
{
	auto entries = parse_catalog(catalog_text);
	auto it = entries.find(std::string(name));
	if (it == entries.end())
		throw CatalogError("catalog: no entry [" + std::string(name) + "]");
	CatalogEntry entry{it->first, it->second, Provenance::BundledFigureData};
	if (auto why = validation_failure(entry); !why.empty())
		throw CatalogError("catalog validation failed: " + why);
	return entry;
}

CatalogEntry load_bundled(std::string_view name) { return load_bundled(name, bundled_catalog_text()); }

std::vector<CatalogEntry> catalog_entries(int f3_max_k, int f4_max_k)
{
	std::vector<CatalogEntry> out;
	for (const auto &name : bundled_names())
		out.push_back(load_bundled(name));
	for (int k = 3; k <= f3_max_k; ++k)
		out.push_back({"F3(" + std::to_string(k) + ")", gen_f3(k), Provenance::Generated});
	for (int k = 1; k <= f4_max_k; ++k)
		out.push_back({"F4(" + std::to_string(k) + ")", gen_f4(k), Provenance::Generated});
	return out;
}

MinimalityReport verify_minimal_forbidden(const Graph &g)
{
	MinimalityReport r;
	r.forbidden = !is_1po(g);
	for (Vertex v = 0; v < g.order(); ++v) {
		++r.deletions_checked;
		if (!is_1po(delete_vertex(g, v)))
			r.failing_deletions.push_back(v);
	}
	for (const Edge &e : g.edges()) {
		++r.contractions_checked;
		if (!is_1po(contract_edge(g, e)))
			r.failing_contractions.push_back(e);
	}
	return r;
}

namespace {

bool connected_set(const Graph &g, const std::vector<Vertex> &s)
{
	if (s.empty())
		return false;
	std::vector<char> in(g.order(), 0), seen(g.order(), 0);
	for (Vertex v : s)
		in[v] = 1;
	std::vector<Vertex> stack{s[0]};
	seen[s[0]] = 1;
	std::size_t reached = 1;
	while (!stack.empty()) {
		Vertex v = stack.back();
		stack.pop_back();
		bits::for_each(g.row(v), g.words(), [&](int u) {
			if (in[u] && !seen[u]) {
				seen[u] = 1;
				++reached;
				stack.push_back(u);
			}
		});
	}
	return reached == s.size();
}

class MinorSearch
{
  public:
	MinorSearch(const Graph &g, const Graph &h) : g_(g), h_(h), part_(g.order(), -1), sizes_(h.order(), 0) {}

	std::optional<MinorModel> run()
	{
		if (dfs(0))
			return model();
		return std::nullopt;
	}

  private:
	MinorModel model() const
	{
		MinorModel m(h_.order());
		for (Vertex v = 0; v < g_.order(); ++v)
			if (part_[v] >= 0)
				m[part_[v]].push_back(v);
		return m;
	}

	bool dfs(Vertex x)
	{
		const int empty = int(std::count(sizes_.begin(), sizes_.end(), 0));
		if (g_.order() - x < empty)
			return false;
		if (x == g_.order())
			return is_minor_model(g_, h_, model());
		for (int p = -1; p < h_.order(); ++p) {
			if (p >= 0 && !compatible(x, p))
				continue;
			part_[x] = p;
			if (p >= 0)
				++sizes_[p];
			if (dfs(x + 1))
				return true;
			if (p >= 0)
				--sizes_[p];
			part_[x] = -1;
		}
		return false;
	}

	// Earlier neighbours of x in other parts must sit in parts adjacent in h.
	bool compatible(Vertex x, int p) const
	{
		for (Vertex y = 0; y < x; ++y) {
			int q = part_[y];
			if (q >= 0 && q != p && g_.adjacent(x, y) && !h_.adjacent(p, q))
				return false;
		}
		return true;
	}

	const Graph &g_;
	const Graph &h_;
	std::vector<int> part_;
	std::vector<int> sizes_;
};

} // namespace

bool is_minor_model(const Graph &g, const Graph &h, const MinorModel &model)
{
	if (int(model.size()) != h.order())
		return false;
	std::vector<int> part(g.order(), -1);
	for (int i = 0; i < h.order(); ++i)
		for (Vertex v : model[i]) {
			if (!g.contains(v) || part[v] >= 0)
				return false;
			part[v] = i;
		}
	for (const auto &s : model)
		if (!connected_set(g, s))
			return false;
	std::vector<char> touch(std::size_t(h.order()) * h.order(), 0);
	for (const Edge &e : g.edges()) {
		int a = part[e.u], b = part[e.v];
		if (a >= 0 && b >= 0 && a != b)
			touch[std::size_t(a) * h.order() + b] = touch[std::size_t(b) * h.order() + a] = 1;
	}
	for (int a = 0; a < h.order(); ++a)
		for (int b = a + 1; b < h.order(); ++b)
			if (bool(touch[std::size_t(a) * h.order() + b]) != h.adjacent(a, b))
				return false;
	return true;
}

std::optional<MinorModel> contains_induced_minor(const Graph &g, const Graph &h, MinorGuard guard)
{
	if (h.order() > guard.max_minor_order || g.order() > guard.max_host_order)
		throw MinorGuardExceeded("induced minor search: orders " + std::to_string(g.order()) + "/" +
		                         std::to_string(h.order()) + " exceed guard " +
		                         std::to_string(guard.max_host_order) + "/" +
		                         std::to_string(guard.max_minor_order));
	if (h.order() > g.order() || h.size() > g.size())
		return std::nullopt;
	if (h.order() == 0)
		return MinorModel{};
	return MinorSearch(g, h).run();
}

Graph random_tree(int n, std::mt19937_64 &rng)
{
	Graph g(n);
	for (Vertex v = 1; v < n; ++v) {
		std::uniform_int_distribution<int> pick(0, v - 1);
		g.add_edge(v, pick(rng));
	}
	return g;
}

Graph random_unicyclic(int n, std::mt19937_64 &rng)
{
	if (n < 3)
		throw std::invalid_argument("random_unicyclic: needs at least 3 vertices");
	Graph g = random_tree(n, rng);
	std::vector<Edge> candidates;
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			if (!g.adjacent(u, v))
				candidates.emplace_back(u, v);
	std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
	Edge e = candidates[pick(rng)];
	g.add_edge(e.u, e.v);
	return g;
}

Graph random_chordal(int n, std::mt19937_64 &rng)
{
	Graph g(n);
	std::bernoulli_distribution coin(0.6);
	for (Vertex v = 1; v < n; ++v) {
		// Attach to a random clique grown around a random earlier vertex.
		std::uniform_int_distribution<int> pick(0, v - 1);
		Vertex seed = pick(rng);
		std::vector<Vertex> clique;
		if (coin(rng))
			clique.push_back(seed);
		std::vector<Vertex> nb;
		for (Vertex u : g.neighbors(seed))
			if (u < v)
				nb.push_back(u);
		std::shuffle(nb.begin(), nb.end(), rng);
		for (Vertex u : nb)
			if (!clique.empty() && coin(rng) &&
			    std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.adjacent(c, u); }))
				clique.push_back(u);
		for (Vertex u : clique)
			g.add_edge(v, u);
	}
	return g;
}

Graph linear_forest(const std::vector<int> &path_orders)
{
	Graph g(0);
	for (int k : path_orders)
		g = disjoint_union(g, path_graph(k));
	return g;
}

} // namespace opo
