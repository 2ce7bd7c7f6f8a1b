#include "opo/io.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace opo {

ParseError::ParseError(const std::string &what, Unit unit, std::size_t position)
    : std::runtime_error(what + (unit == Unit::Line ? " at line " : " at byte ") +
                         std::to_string(position)),
      unit_(unit), position_(position)
{}

namespace {

struct Line
{
	std::size_t number;
	std::string_view text;
};

// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text)
{
	std::vector<Line> out;
	std::size_t number = 0;
	while (!text.empty() || number == 0) {
		++number;
		std::size_t nl = text.find('\n');
		std::string_view line = text.substr(0, nl);
		text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
		if (auto hash = line.find('#'); hash != std::string_view::npos)
			line = line.substr(0, hash);
		while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
			line.remove_suffix(1);
		while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
			line.remove_prefix(1);
		if (!line.empty())
			out.push_back({number, line});
		if (nl == std::string_view::npos)
			break;
	}
	return out;
}

// Splits on whitespace and parses non-negative integers.
std::optional<std::vector<long long>> integers(std::string_view s)
{
	std::vector<long long> out;
	std::size_t i = 0;
	while (i < s.size()) {
		while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
			++i;
		if (i == s.size())
			break;
		long long value = 0;
		auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
		if (ec != std::errc{} || value < 0)
			return std::nullopt;
		std::size_t consumed = ptr - (s.data() + i);
		i += consumed;
		if (i < s.size() && s[i] != ' ' && s[i] != '\t')
			return std::nullopt;
		out.push_back(value);
	}
	return out;
}

struct Header
{
	int n;
	int m;
	std::size_t line;
};

Header read_header(const std::vector<Line> &lines)
{
	using U = ParseError::Unit;
	if (lines.empty())
		throw ParseError("malformed header: empty input", U::Line, 1);
	auto h = integers(lines[0].text);
	if (!h || h->size() != 2)
		throw ParseError("malformed header: expected \"n m\"", U::Line, lines[0].number);
	if ((*h)[0] > 4096 || (*h)[1] > 8'386'560)
		throw ParseError("malformed header: counts too large", U::Line, lines[0].number);
	return {int((*h)[0]), int((*h)[1]), lines[0].number};
}

// Reads the m pairs following the header.
template <class F>
void read_pairs(const std::vector<Line> &lines, const Header &h, F &&on_pair)
{
	using U = ParseError::Unit;
	if (lines.size() - 1 != std::size_t(h.m)) {
		std::size_t at = lines.size() - 1 < std::size_t(h.m) ? lines.back().number + 1
		                                                      : lines[h.m + 1].number;
		throw ParseError("malformed input: header declares " + std::to_string(h.m) +
		                     " edges, found " + std::to_string(lines.size() - 1),
		                 U::Line, at);
	}
	for (std::size_t i = 1; i < lines.size(); ++i) {
		auto p = integers(lines[i].text);
		if (!p || p->size() != 2)
			throw ParseError("malformed edge line: expected \"u v\"", U::Line, lines[i].number);
		long long u = (*p)[0], v = (*p)[1];
		if (u >= h.n || v >= h.n)
			throw ParseError("vertex label out of range", U::Line, lines[i].number);
		on_pair(int(u), int(v), lines[i].number);
	}
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
	using U = ParseError::Unit;
	auto lines = content_lines(text);
	Header h = read_header(lines);
	Graph g(h.n);
	read_pairs(lines, h, [&](int u, int v, std::size_t line) {
		if (u == v)
			throw ParseError("self-loop", U::Line, line);
		if (g.adjacent(u, v))
			throw ParseError("duplicate edge", U::Line, line);
		g.add_edge(u, v);
	});
	return g;
}

std::string to_edge_list(const Graph &g)
{
	std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
	for (const Edge &e : g.edges())
		out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
	return out;
}

Graph parse_graph6(std::string_view text)
{
	using U = ParseError::Unit;
	constexpr std::string_view header = ">>graph6<<";
	std::size_t base = 0;
	if (text.starts_with(header)) {
		text.remove_prefix(header.size());
		base = header.size();
	}
	while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
		text.remove_suffix(1);
	if (text.empty())
		throw ParseError("graph6: empty input", U::Byte, base);
	for (std::size_t i = 0; i < text.size(); ++i)
		if (text[i] < 63 || text[i] > 126)
			throw ParseError("graph6: byte outside 63..126", U::Byte, base + i);

	std::size_t pos = 0;
	auto take = [&](int count) {
		long long v = 0;
		for (int k = 0; k < count; ++k) {
			if (pos >= text.size())
				throw ParseError("graph6: truncated vertex count", U::Byte, base + pos);
			v = (v << 6) | (text[pos++] - 63);
		}
		return v;
	};
	long long n;
	if (text[0] != 126) {
		n = take(1);
	} else if (text.size() > 1 && text[1] != 126) {
		pos = 1;
		n = take(3);
	} else {
		pos = 2;
		n = take(6);
	}
	if (n > 4096)
		throw ParseError("graph6: vertex count too large", U::Byte, base);

	std::size_t bits_needed = std::size_t(n) * (n - 1) / 2;
	std::size_t bytes_needed = (bits_needed + 5) / 6;
	if (text.size() - pos != bytes_needed)
		throw ParseError("graph6: expected " + std::to_string(bytes_needed) +
		                     " adjacency bytes, found " + std::to_string(text.size() - pos),
		                 U::Byte, base + std::min(text.size(), pos + bytes_needed));

	Graph g(static_cast<int>(n));
	std::size_t k = 0;
	for (int j = 1; j < n; ++j)
		for (int i = 0; i < j; ++i, ++k) {
			int byte = text[pos + k / 6] - 63;
			if ((byte >> (5 - k % 6)) & 1)
				g.add_edge(i, j);
		}
	// Padding bits must be zero.
	if (bits_needed % 6 != 0) {
		int last = text.back() - 63;
		int pad = int(6 - bits_needed % 6);
		if (last & ((1 << pad) - 1))
			throw ParseError("graph6: nonzero padding bits", U::Byte, base + text.size() - 1);
	}
	return g;
}

std::string to_graph6(const Graph &g)
{
	std::string out;
	long long n = g.order();
	if (n <= 62) {
		out.push_back(char(63 + n));
	} else if (n <= 258047) {
		out.push_back(126);
		for (int s = 12; s >= 0; s -= 6)
			out.push_back(char(63 + ((n >> s) & 63)));
	} else {
		out.push_back(126);
		out.push_back(126);
		for (int s = 30; s >= 0; s -= 6)
			out.push_back(char(63 + ((n >> s) & 63)));
	}
	int acc = 0, filled = 0;
	for (int j = 1; j < n; ++j)
		for (int i = 0; i < j; ++i) {
			acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
			if (++filled == 6) {
				out.push_back(char(63 + acc));
				acc = filled = 0;
			}
		}
	if (filled)
		out.push_back(char(63 + (acc << (6 - filled))));
	return out;
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
	return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

std::string serialize_graph(const Graph &g, GraphFormat format)
{
	return format == GraphFormat::EdgeList ? to_edge_list(g) : to_graph6(g) + "\n";
}

std::string to_arc_list(const Orientation &d)
{
	const Graph &g = d.base();
	std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
	for (const Edge &e : g.edges()) {
		Arc a = d.has_arc(e.u, e.v) ? Arc{e.u, e.v} : Arc{e.v, e.u};
		out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
	}
	return out;
}

Orientation parse_arc_list(std::string_view text, const Graph &base)
{
	using U = ParseError::Unit;
	auto lines = content_lines(text);
	Header h = read_header(lines);
	if (h.n != base.order() || h.m != base.size())
		throw ParseError("orientation header does not match the graph (" +
		                     std::to_string(base.order()) + " " + std::to_string(base.size()) +
		                     ")",
		                 U::Line, h.line);
	std::vector<Arc> arcs;
	std::vector<char> seen(std::size_t(base.order()) * base.order(), 0);
	read_pairs(lines, h, [&](int u, int v, std::size_t line) {
		if (u == v || !base.adjacent(u, v))
			throw ParseError("arc is not an edge of the graph", U::Line, line);
		auto key = std::size_t(std::min(u, v)) * base.order() + std::max(u, v);
		if (seen[key])
			throw ParseError("edge oriented twice", U::Line, line);
		seen[key] = 1;
		arcs.push_back({u, v});
	});
	return Orientation(base, arcs);
}

} // namespace opo
