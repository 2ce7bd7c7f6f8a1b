#include "opo/canonical.hpp"

#include "opo/io.hpp"

#include <algorithm>
#include <optional>

namespace opo {

namespace {

using Partition = std::vector<std::vector<Vertex>>;

void refine(const Graph &g, Partition &cells)
{
	bool changed = true;
	while (changed) {
		changed = false;
		std::vector<int> cell_of(g.order());
		for (std::size_t c = 0; c < cells.size(); ++c)
			for (Vertex v : cells[c])
				cell_of[v] = int(c);
		Partition next;
		for (const auto &cell : cells) {
			if (cell.size() == 1) {
				next.push_back(cell);
				continue;
			}
			std::vector<std::pair<std::vector<int>, Vertex>> sig;
			for (Vertex v : cell) {
				std::vector<int> counts(cells.size(), 0);
				bits::for_each(g.row(v), g.words(), [&](int u) { ++counts[cell_of[u]]; });
				sig.emplace_back(std::move(counts), v);
			}
			std::sort(sig.begin(), sig.end());
			std::size_t start = next.size();
			next.push_back({sig[0].second});
			for (std::size_t i = 1; i < sig.size(); ++i) {
				if (sig[i].first != sig[i - 1].first)
					next.push_back({});
				next.back().push_back(sig[i].second);
			}
			if (next.size() - start > 1)
				changed = true;
		}
		cells = std::move(next);
	}
}

bool twins(const Graph &g, Vertex x, Vertex y)
{
	for (Vertex z = 0; z < g.order(); ++z)
		if (z != x && z != y && g.adjacent(x, z) != g.adjacent(y, z))
			return false;
	return true;
}

struct Search
{
	const Graph &g;
	std::optional<std::string> best;
	std::vector<Vertex> best_label;

	void leaf(const Partition &cells)
	{
		std::vector<Vertex> label(g.order());
		for (std::size_t i = 0; i < cells.size(); ++i)
			label[cells[i][0]] = int(i);
		std::string code = to_graph6(relabel(g, label));
		if (!best || code < *best) {
			best = std::move(code);
			best_label = std::move(label);
		}
	}

	void run(Partition cells)
	{
		refine(g, cells);
		std::size_t target = cells.size();
		for (std::size_t i = 0; i < cells.size(); ++i)
			if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size()))
				target = i;
		if (target == cells.size()) {
			leaf(cells);
			return;
		}
		std::vector<Vertex> tried;
		for (Vertex v : cells[target]) {
			if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(g, t, v); }))
				continue;
			tried.push_back(v);
			Partition next;
			for (std::size_t i = 0; i < cells.size(); ++i) {
				if (i != target) {
					next.push_back(cells[i]);
					continue;
				}
				next.push_back({v});
				std::vector<Vertex> rest;
				for (Vertex x : cells[i])
					if (x != v)
						rest.push_back(x);
				next.push_back(std::move(rest));
			}
			run(std::move(next));
		}
	}
};

} // namespace

Graph relabel(const Graph &g, const std::vector<Vertex> &label)
{
	Graph h(g.order());
	for (const Edge &e : g.edges())
		h.add_edge(label[e.u], label[e.v]);
	return h;
}

std::vector<Vertex> canonical_labeling(const Graph &g)
{
	if (g.order() == 0)
		return {};
	Search s{g, std::nullopt, {}};
	Partition start(1);
	for (Vertex v = 0; v < g.order(); ++v)
		start[0].push_back(v);
	s.run(std::move(start));
	return s.best_label;
}

Graph canonical_form(const Graph &g) { return relabel(g, canonical_labeling(g)); }

bool isomorphic(const Graph &a, const Graph &b)
{
	if (a.order() != b.order() || a.size() != b.size())
		return false;
	return canonical_form(a) == canonical_form(b);
}

} // namespace opo
