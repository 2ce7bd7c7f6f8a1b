#include "opo/clique_cover.hpp"

#include "opo/io.hpp"
#include "opo/oracle.hpp"
#include "opo/recognition.hpp"

#include <algorithm>
#include <charconv>

namespace opo {

bool VertexSets::contains(Vertex owner, Vertex x) const
{
	const auto &s = sets[owner];
	return std::find(s.begin(), s.end(), x) != s.end();
}

EdgeCliqueCover cover_from_orientation(const Orientation &d)
{
	if (!verify_1perfect(d))
		throw NotOnePerfect("cover_from_orientation: orientation is not 1-perfect");
	EdgeCliqueCover cover;
	cover.sets.resize(d.order());
	for (Vertex v = 0; v < d.order(); ++v) {
		auto &c = cover.sets[v];
		c.push_back(v);
		for (Vertex u : d.out_neighbors(v))
			c.push_back(u);
		std::sort(c.begin(), c.end());
	}
	return cover;
}

bool validate_cover(const Graph &g, const EdgeCliqueCover &cover, CoverMode mode)
{
	if (cover.size() != g.order())
		throw std::invalid_argument("cover has " + std::to_string(cover.size()) +
		                            " sets, graph has " + std::to_string(g.order()) + " vertices");
	const int n = g.order();
	// Membership matrix, also used to check edge coverage.
	std::vector<char> in(std::size_t(n) * n, 0);
	std::vector<char> covered(std::size_t(n) * n, 0);
	for (Vertex i = 0; i < n; ++i) {
		const auto &c = cover.sets[i];
		for (Vertex x : c)
			if (!g.contains(x))
				return false;
		if (!g.is_clique(c))
			return false;
		for (Vertex x : c)
			in[std::size_t(i) * n + x] = 1;
		if (!in[std::size_t(i) * n + i])
			return false;
		for (Vertex x : c)
			for (Vertex y : c)
				covered[std::size_t(x) * n + y] = 1;
	}
	for (const Edge &e : g.edges()) {
		if (!covered[std::size_t(e.u) * n + e.v])
			return false;
		bool a = in[std::size_t(e.v) * n + e.u]; // v_u in C_v
		bool b = in[std::size_t(e.u) * n + e.v]; // v_v in C_u
		if (mode == CoverMode::Exclusive ? a == b : !(a || b))
			return false;
	}
	return true;
}

Orientation orientation_from_cover(const Graph &g, const EdgeCliqueCover &cover)
{
	if (!validate_cover(g, cover, CoverMode::Inclusive))
		throw std::invalid_argument("orientation_from_cover: cover is not a valid inclusive cover");
	std::vector<Arc> arcs;
	for (const Edge &e : g.edges())
		arcs.push_back(cover.contains(e.u, e.v) ? Arc{e.u, e.v} : Arc{e.v, e.u});
	return Orientation(g, arcs);
}

bool validate_independent_system(const Graph &g, const IndependentSystem &sys)
{
	if (sys.size() != g.order())
		return false;
	for (Vertex i = 0; i < g.order(); ++i) {
		const auto &s = sys.sets[i];
		for (Vertex x : s)
			if (!g.contains(x))
				return false;
		if (!sys.contains(i, i) || !g.is_independent(s))
			return false;
	}
	for (Vertex i = 0; i < g.order(); ++i)
		for (Vertex j = i + 1; j < g.order(); ++j)
			if (!g.adjacent(i, j) && !sys.contains(j, i) && !sys.contains(i, j))
				return false;
	return true;
}

std::optional<IndependentSystem> independent_system_for_complement(const Graph &g)
{
	Graph co = complement(g);
	auto d = recognize(co);
	if (!d)
		return std::nullopt;
	IndependentSystem sys;
	sys.sets = cover_from_orientation(*d).sets;
	return sys;
}

bool cover_count_bound_check(const Graph &g)
{
	auto d = recognize(g);
	if (!d)
		throw NotOnePerfect("cover_count_bound_check: graph is not 1-perfectly orientable");
	EdgeCliqueCover cover = cover_from_orientation(*d);
	return cover.size() == g.order() && validate_cover(g, cover, CoverMode::Exclusive);
}

std::string to_cover_text(const VertexSets &sets)
{
	std::string out = "# " + std::to_string(sets.size()) + " sets, line i is the set of vertex i\n";
	for (const auto &s : sets.sets) {
		for (std::size_t k = 0; k < s.size(); ++k) {
			if (k)
				out += ' ';
			out += std::to_string(s[k]);
		}
		out += '\n';
	}
	return out;
}

EdgeCliqueCover parse_cover(std::string_view text, int n)
{
	EdgeCliqueCover cover;
	std::size_t line_no = 0;
	while (!text.empty()) {
		++line_no;
		std::size_t nl = text.find('\n');
		std::string_view line = text.substr(0, nl);
		text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
		if (auto h = line.find('#'); h != std::string_view::npos)
			line = line.substr(0, h);
		std::vector<Vertex> set;
		std::size_t i = 0;
		bool any = false;
		while (i < line.size()) {
			if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
				++i;
				continue;
			}
			int value = 0;
			auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
			if (ec != std::errc{} || value < 0 || value >= n)
				throw ParseError("cover: bad vertex label", ParseError::Unit::Line, line_no);
			i = ptr - line.data();
			set.push_back(value);
			any = true;
		}
		if (any) {
			std::sort(set.begin(), set.end());
			if (std::adjacent_find(set.begin(), set.end()) != set.end())
				throw ParseError("cover: repeated vertex in set", ParseError::Unit::Line, line_no);
			cover.sets.push_back(std::move(set));
		}
	}
	if (cover.size() != n)
		throw ParseError("cover: expected " + std::to_string(n) + " sets, found " +
		                     std::to_string(cover.size()),
		                 ParseError::Unit::Line, line_no);
	return cover;
}

} // namespace opo
