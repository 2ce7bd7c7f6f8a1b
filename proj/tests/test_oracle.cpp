#include "support.hpp"

#include "opo/catalog.hpp"
#include "opo/canonical.hpp"
#include "opo/oracle.hpp"

#include <doctest.h>

using namespace opo;

namespace {

// Out-neighbourhood check written against raw arc lists.
bool naive_1perfect(const Graph &g, const std::vector<Arc> &arcs)
{
	for (Vertex v = 0; v < g.order(); ++v) {
		std::vector<Vertex> out;
		for (const Arc &a : arcs)
			if (a.tail == v)
				out.push_back(a.head);
		for (std::size_t i = 0; i < out.size(); ++i)
			for (std::size_t j = i + 1; j < out.size(); ++j)
				if (!g.adjacent(out[i], out[j]))
					return false;
	}
	return true;
}

int naive_count(const Graph &g)
{
	auto edges = g.edges();
	int count = 0;
	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
		std::vector<Arc> arcs;
		for (std::size_t i = 0; i < edges.size(); ++i)
			arcs.push_back((mask >> i) & 1 ? Arc{edges[i].u, edges[i].v} : Arc{edges[i].v, edges[i].u});
		count += naive_1perfect(g, arcs);
	}
	return count;
}

Orientation cyclic(const Graph &g, const std::vector<Vertex> &order)
{
	std::vector<Arc> arcs;
	for (std::size_t i = 0; i < order.size(); ++i)
		arcs.push_back({order[i], order[(i + 1) % order.size()]});
	return Orientation(g, arcs);
}

} // namespace

TEST_CASE("verify_1perfect examples")
{
	Graph c4 = cycle_graph(4);
	CHECK(verify_1perfect(cyclic(c4, {0, 1, 2, 3})));
	std::vector<Arc> source{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
	CHECK(!verify_1perfect(Orientation(c4, source)));
	for (std::uint64_t m = 0; m < 8; ++m)
		CHECK(verify_1perfect(Orientation::from_mask(complete_graph(3), m)));
}

TEST_CASE("is_1po_bruteforce examples")
{
	CHECK(!is_1po_bruteforce(complete_bipartite(2, 3)));
	auto c5 = is_1po_bruteforce(cycle_graph(5));
	REQUIRE(c5);
	CHECK(verify_1perfect(*c5));
	for (Vertex v = 0; v < 5; ++v)
		CHECK(c5->out_degree(v) == 1);
	std::mt19937_64 rng(1);
	for (int i = 0; i < 50; ++i) {
		auto d = is_1po_bruteforce(random_tree(1 + int(rng() % 15), rng));
		REQUIRE(d);
		CHECK(verify_1perfect(*d));
	}
}

TEST_CASE("oracle guard")
{
	CHECK_THROWS_AS(is_1po_bruteforce(complete_graph(8)), GuardExceeded);
	CHECK_NOTHROW(is_1po_bruteforce(complete_graph(8), 28));
	CHECK_THROWS_AS(all_1perfect_orientations(complete_graph(8), 20), GuardExceeded);
	CHECK_THROWS_AS(exists_orientation_all_c4_cyclic(complete_graph(8), 20), GuardExceeded);
}

TEST_CASE("witness is the least mask")
{
	std::mt19937_64 rng(4);
	for (int i = 0; i < 200; ++i) {
		Graph g = test::random_graph(2 + int(rng() % 6), 0.5, rng);
		auto serial = first_1perfect_mask_serial(g);
		auto parallel = first_1perfect_mask_parallel(g);
		CHECK(serial == parallel);
		if (!serial)
			continue;
		for (std::uint64_t m = 0; m < *serial; ++m)
			CHECK(!verify_1perfect(Orientation::from_mask(g, m)));
		CHECK(*is_1po_bruteforce(g) == Orientation::from_mask(g, *serial));
	}
}

TEST_CASE("serial and parallel scans agree on larger inputs")
{
	std::mt19937_64 rng(8);
	for (int i = 0; i < 6; ++i) {
		Graph g = test::random_graph(7, 0.6, rng);
		CHECK(first_1perfect_mask_serial(g, 24) == first_1perfect_mask_parallel(g, 24));
	}
	Graph k = complement(cycle_graph(6));
	CHECK(!first_1perfect_mask_parallel(k));
	CHECK(!first_1perfect_mask_serial(k));
}

TEST_CASE("all_1perfect_orientations examples")
{
	// Counts from the naive arc-list check over all orientations.
	CHECK(naive_count(cycle_graph(4)) == 2);
	CHECK(all_1perfect_orientations(cycle_graph(4)).size() == 2);
	CHECK(all_1perfect_orientations(complete_graph(2)).size() == 2);
	CHECK(all_1perfect_orientations(complete_bipartite(2, 3)).empty());
}

TEST_CASE("orientation enumeration matches the naive count")
{
	std::mt19937_64 rng(6);
	for (int i = 0; i < 100; ++i) {
		Graph g = test::random_graph(2 + int(rng() % 5), 0.5, rng);
		auto all = all_1perfect_orientations(g);
		CHECK(int(all.size()) == naive_count(g));
		for (std::size_t k = 0; k < all.size(); ++k) {
			CHECK(verify_1perfect(all[k]));
			for (std::size_t l = 0; l < k; ++l)
				CHECK(!(all[k] == all[l]));
		}
	}
}

TEST_CASE("bruteforce presence matches enumeration (exhaustive n <= 6)")
{
	for (int n = 1; n <= 6; ++n)
		for (const Graph &g : test::graph_representatives(n)) {
			bool any = false;
			for_each_1perfect_orientation(g, [&](const Orientation &) {
				any = true;
				return false;
			});
			REQUIRE(is_1po_bruteforce(g).has_value() == any);
		}
}

TEST_CASE("check_chordless_cycles_cyclic examples")
{
	Graph c5 = cycle_graph(5);
	CHECK(check_chordless_cycles_cyclic(cyclic(c5, {0, 1, 2, 3, 4})));
	std::vector<Arc> source{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
	CHECK(!check_chordless_cycles_cyclic(Orientation(c5, source)));

	Graph f = complement(cycle_graph(7));
	auto all = all_1perfect_orientations(f, 24);
	CHECK(!all.empty());
	for (const Orientation &d : all)
		CHECK(check_chordless_cycles_cyclic(d));
}

TEST_CASE("1-perfect orientations orient chordless cycles cyclically (n <= 6)")
{
	for (int n = 4; n <= 6; ++n)
		for (const Graph &g : test::graph_representatives(n))
			for_each_1perfect_orientation(g, [](const Orientation &d) {
				REQUIRE(check_chordless_cycles_cyclic(d));
				return true;
			});
}

TEST_CASE("verify_1perfect is invariant under relabelling")
{
	std::mt19937_64 rng(12);
	for (int i = 0; i < 300; ++i) {
		Graph g = test::random_graph(1 + int(rng() % 8), 0.5, rng);
		Orientation d = Orientation::from_mask(g, rng() & ((std::uint64_t{1} << g.size()) - 1));
		auto p = test::random_permutation(g.order(), rng);
		std::vector<Arc> arcs;
		for (const Arc &a : d.arcs())
			arcs.push_back({p[a.tail], p[a.head]});
		Orientation q(relabel(g, p), arcs);
		CHECK(verify_1perfect(d) == verify_1perfect(q));
	}
}

TEST_CASE("exists_orientation_all_c4_cyclic examples")
{
	auto c4 = exists_orientation_all_c4_cyclic(cycle_graph(4));
	REQUIRE(c4);
	CHECK(is_cycle_cyclic(*c4, {0, 1, 2, 3}));
	CHECK(!exists_orientation_all_c4_cyclic(complement(cycle_graph(6))));
	CHECK(exists_orientation_all_c4_cyclic(complete_graph(4)));
}

TEST_CASE("c4-cyclic search agrees with a full scan")
{
	std::mt19937_64 rng(14);
	for (int i = 0; i < 150; ++i) {
		Graph g = test::random_graph(4 + int(rng() % 3), 0.55, rng);
		auto c4s = enumerate_chordless_cycles(g, 4);
		std::erase_if(c4s, [](const auto &c) { return c.size() != 4; });
		bool any = false;
		for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()) && !any; ++m) {
			Orientation d = Orientation::from_mask(g, m);
			any = std::all_of(c4s.begin(), c4s.end(), [&](const auto &c) { return is_cycle_cyclic(d, c); });
		}
		auto w = exists_orientation_all_c4_cyclic(g);
		CHECK(w.has_value() == any);
		if (w)
			for (const auto &c : c4s)
				CHECK(is_cycle_cyclic(*w, c));
	}
}
