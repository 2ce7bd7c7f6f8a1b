#pragma once

#include "opo/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace opo {

inline constexpr int default_oracle_guard = 24;

// Raised when an exhaustive search would exceed its edge budget; callers
// should fall back to the polynomial recognizer.
class GuardExceeded : public std::runtime_error
{
  public:
	GuardExceeded(int edges, int guard);
	int edges() const { return edges_; }
	int guard() const { return guard_; }

  private:
	int edges_;
	int guard_;
};

// True iff every out-neighbourhood is a clique of the base graph.
bool verify_1perfect(const Orientation &d);

// Orientations are encoded as masks over the canonical edge list
// (bit i set: edges()[i] is oriented from its lower to its higher label).
// Both scans return the least mask whose orientation is 1-perfect.
std::optional<std::uint64_t> first_1perfect_mask_serial(const Graph &g, int guard = default_oracle_guard);
std::optional<std::uint64_t> first_1perfect_mask_parallel(const Graph &g, int guard = default_oracle_guard);

// Exhaustive 1-p.o. test; the witness is the least mask.
std::optional<Orientation> is_1po_bruteforce(const Graph &g, int guard = default_oracle_guard);

// Calls visit for every 1-perfect orientation, in increasing mask order.
// Returning false from visit stops the scan.
void for_each_1perfect_orientation(const Graph &g, const std::function<bool(const Orientation &)> &visit,
                                   int guard = default_oracle_guard);
std::vector<Orientation> all_1perfect_orientations(const Graph &g, int guard = default_oracle_guard);

// Every chordless cycle of length >= 4 has each of its vertices with
// exactly one out-neighbour on the cycle.
bool check_chordless_cycles_cyclic(const Orientation &d);
bool is_cycle_cyclic(const Orientation &d, const std::vector<Vertex> &cycle);

// Orientation in which every induced 4-cycle is cyclic. Exhaustive over
// the edges lying on induced 4-cycles (others stay low->high), with
// pruning on completed cycles; returns the least such mask.
std::optional<Orientation> exists_orientation_all_c4_cyclic(const Graph &g, int guard = default_oracle_guard);

} // namespace opo
