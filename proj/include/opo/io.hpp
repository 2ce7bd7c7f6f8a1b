#pragma once

#include "opo/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace opo {

enum class GraphFormat { EdgeList, Graph6 };

// Parse failure carrying the 1-based line (edge-list) or 0-based byte
// offset (graph6) where the problem was detected.
class ParseError : public std::runtime_error
{
  public:
	enum class Unit { Line, Byte };

	ParseError(const std::string &what, Unit unit, std::size_t position);

	Unit unit() const { return unit_; }
	std::size_t position() const { return position_; }

  private:
	Unit unit_;
	std::size_t position_;
};

// Edge-list: "n m" header, then m lines "u v". Either endpoint order is
// accepted; '#' starts a comment, blank lines are skipped.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph &g);

// graph6, with or without the ">>graph6<<" header; one graph, trailing
// newline optional.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph &g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph &g, GraphFormat format);

// Orientation file: "n m" header then one "tail head" line per arc.
std::string to_arc_list(const Orientation &d);
// Parses an arc list and checks it orients `base` exactly.
Orientation parse_arc_list(std::string_view text, const Graph &base);

} // namespace opo
