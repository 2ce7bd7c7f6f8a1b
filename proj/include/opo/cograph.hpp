#pragma once

#include "opo/graph.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace opo {

struct Cotree
{
	enum class Kind { Leaf, Union, Join };

	Kind kind = Kind::Leaf;
	Vertex vertex = -1; // leaves only
	std::vector<Cotree> children;

	static Cotree leaf(Vertex v) { return {Kind::Leaf, v, {}}; }

	// Leaf labels in left-to-right order.
	std::vector<Vertex> vertices() const;
	// "(join (union 0 1) 2)"; leaves print as their labels.
	std::string to_sexpr() const;
};

struct CotreeResult
{
	std::optional<Cotree> cotree;
	// Induced P4 (in path order) when the graph is not a cograph.
	std::optional<std::array<Vertex, 4>> p4;

	explicit operator bool() const { return cotree.has_value(); }
};

CotreeResult build_cotree(const Graph &g);
// Graph on `n` vertices described by the cotree.
Graph rebuild(const Cotree &t, int n);
bool is_cograph(const Graph &g);

class NotACograph : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

// The recursive structural condition: K1, complement of mK2 (m >= 2), a
// disjoint union of two smaller such cographs, or one obtained from a
// smaller such cograph by adding a universal vertex or a true twin.
bool cograph_is_1po_structural(const Graph &g);

// Five vertices {a1,a2 | b1,b2,b3} inducing K_{2,3}.
std::optional<std::array<Vertex, 5>> contains_k23(const Graph &g);

} // namespace opo
