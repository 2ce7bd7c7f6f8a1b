#pragma once

#include "opo/clique_cover.hpp"
#include "opo/cobipartite.hpp"
#include "opo/graph.hpp"

#include <optional>
#include <utility>

namespace opo {

// Each transform takes 1-perfect orientations and returns a 1-perfect
// orientation of the transformed graph. Inputs that are not 1-perfect
// raise NotOnePerfect; other precondition failures raise
// std::invalid_argument.

// Vertices of d2 are shifted by d1.order().
Orientation orient_disjoint_union(const Orientation &d1, const Orientation &d2);

// New vertex n; every old vertex points to it.
Orientation orient_add_universal(const Orientation &d);

// New vertex n twins w: n -> u for u in N+(w), u -> n for u in N-(w),
// and w -> n.
Orientation orient_add_true_twin(const Orientation &d, Vertex w);

// New vertex n points to every vertex of the clique.
Orientation orient_add_simplicial(const Orientation &d, std::span<const Vertex> clique);

// Intermediate data of the 2-branch duplication, kept for inspection.
struct Branch2Duplication
{
	Graph result;                 // complement of duplicate_2branch(complement(g), br)
	IndependentSystem maximal;    // I_j extended to maximal independent sets of complement(g)
	EdgeCliqueCover cover;        // J_k, cliques of result
	Orientation orientation;      // 1-perfect orientation of result
};

// br is a 2-branch of complement(g); g must be 1-p.o.
Branch2Duplication duplicate_2branch_in_complement(const Graph &g, const Branch2 &br);

// Orientation of contract_edge(d.base(), e) following the partition of
// the neighbourhood of e into X, Y, U, W, Z.
Orientation orient_contract_edge(const Orientation &d, Edge e);

// Vertex deletion transfers nothing; the result is re-recognized.
std::optional<Orientation> orient_delete_vertex(const Graph &g, Vertex v);

// Orientation of join(d1.base(), d2.base()) with cross arcs
// A1 -> A2, B1 -> B2, A2 -> B1, B2 -> A1.
Orientation orient_join(const Orientation &d1, const Orientation &d2, const CliqueBipartition &parts1,
                        const CliqueBipartition &parts2);
// Same, with canonical bipartitions from find_clique_bipartition.
Orientation orient_join(const Orientation &d1, const Orientation &d2);

// (G1 complete and G2 1-p.o.) or (G2 complete and G1 1-p.o.) or both
// co-bipartite and 1-p.o.
bool join_is_1po(const Graph &g1, const Graph &g2);

} // namespace opo
