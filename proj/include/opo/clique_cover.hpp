#pragma once

#include "opo/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opo {

// Vertex-indexed family of sets; sets[i] belongs to vertex i. Used both
// for clique covers of G and for independent systems of G (cliques of
// the complement).
struct VertexSets
{
	std::vector<std::vector<Vertex>> sets;

	int size() const { return int(sets.size()); }
	bool contains(Vertex owner, Vertex x) const;

	friend bool operator==(const VertexSets &, const VertexSets &) = default;
};

// C_i is a clique containing v_i; every edge lies in some C_i.
struct EdgeCliqueCover : VertexSets
{};

// I_i is an independent set containing v_i.
struct IndependentSystem : VertexSets
{};

enum class CoverMode {
	Exclusive, // exactly one of v_i in C_j, v_j in C_i per edge
	Inclusive, // at least one
};

class NotOnePerfect : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

// C_i = {v_i} together with the out-neighbourhood of v_i.
EdgeCliqueCover cover_from_orientation(const Orientation &d);

// Throws std::invalid_argument when the set count differs from n.
bool validate_cover(const Graph &g, const EdgeCliqueCover &cover, CoverMode mode);

// For i < j adjacent: v_i -> v_j if v_j in C_i, else v_j -> v_i.
Orientation orientation_from_cover(const Graph &g, const EdgeCliqueCover &cover);

// Independent sets I_i of G with v_i in I_i such that every non-adjacent
// pair has v_i in I_j or v_j in I_i; exists iff the complement is 1-p.o.
std::optional<IndependentSystem> independent_system_for_complement(const Graph &g);
bool validate_independent_system(const Graph &g, const IndependentSystem &sys);

// Throws NotOnePerfect unless g is 1-p.o.; otherwise returns true after
// producing and checking an n-set edge clique cover.
bool cover_count_bound_check(const Graph &g);

// One line per C_i, labels separated by spaces, '#' comments.
std::string to_cover_text(const VertexSets &sets);
EdgeCliqueCover parse_cover(std::string_view text, int n);

} // namespace opo
