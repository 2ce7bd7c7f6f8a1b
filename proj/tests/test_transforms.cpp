#include "support.hpp"

#include "opo/oracle.hpp"
#include "opo/recognition.hpp"
#include "opo/transforms.hpp"

#include <doctest.h>

using namespace opo;

namespace {

Orientation cyclic(const Graph &g, const std::vector<Vertex> &order)
{
	std::vector<Arc> arcs;
	for (std::size_t i = 0; i < order.size(); ++i)
		arcs.push_back({order[i], order[(i + 1) % order.size()]});
	return Orientation(g, arcs);
}

Orientation c4_cyclic() { return cyclic(cycle_graph(4), {0, 1, 2, 3}); }

// Random graph with a 2-branch hanging off a random vertex.
std::pair<Graph, Branch2> random_with_2branch(std::mt19937_64 &rng)
{
	int n = 1 + int(rng() % 6);
	Graph base = test::random_graph(n, 0.5, rng);
	Graph h(n + 2);
	for (const Edge &e : base.edges())
		h.add_edge(e.u, e.v);
	Vertex a = Vertex(rng() % n);
	h.add_edge(a, n);
	h.add_edge(n, n + 1);
	return {h, {a, n, n + 1}};
}

} // namespace

TEST_CASE("orient_disjoint_union examples")
{
	auto d = orient_disjoint_union(c4_cyclic(), c4_cyclic());
	CHECK(d.base() == disjoint_union(cycle_graph(4), cycle_graph(4)));
	CHECK(verify_1perfect(d));
	CHECK(orient_disjoint_union(Orientation(Graph(1), {}), Orientation(Graph(1), {})).base() == empty_graph(2));
	std::vector<Arc> k2{{0, 1}};
	auto m = orient_disjoint_union(cyclic(cycle_graph(5), {0, 1, 2, 3, 4}), Orientation(complete_graph(2), k2));
	CHECK(verify_1perfect(m));
	CHECK(m.has_arc(5, 6));
	std::vector<Arc> source{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
	CHECK_THROWS_AS(orient_disjoint_union(Orientation(cycle_graph(4), source), c4_cyclic()), NotOnePerfect);
}

TEST_CASE("orient_add_universal examples")
{
	auto p3 = orient_add_universal(Orientation(empty_graph(2), {}));
	CHECK(p3.has_arc(0, 2));
	CHECK(p3.has_arc(1, 2));
	auto wheel = orient_add_universal(c4_cyclic());
	CHECK(verify_1perfect(wheel));
	CHECK(wheel.out_degree(4) == 0);
	auto k2 = orient_add_universal(Orientation(Graph(1), {}));
	CHECK(k2.arcs() == std::vector<Arc>{{0, 1}});
}

TEST_CASE("orient_add_true_twin examples")
{
	std::vector<Arc> k2{{0, 1}};
	auto k3 = orient_add_true_twin(Orientation(complete_graph(2), k2), 0);
	CHECK(k3.base() == complete_graph(3));
	CHECK(verify_1perfect(k3));
	CHECK(k3.has_arc(0, 2));
	CHECK(k3.has_arc(2, 1));
	CHECK(orient_add_true_twin(Orientation(Graph(1), {}), 0).base() == complete_graph(2));
	for (Vertex w = 0; w < 4; ++w) {
		auto t = orient_add_true_twin(c4_cyclic(), w);
		CHECK(t.order() == 5);
		CHECK(verify_1perfect(t));
	}
}

TEST_CASE("orient_add_simplicial examples")
{
	auto iso = orient_add_simplicial(c4_cyclic(), std::vector<Vertex>{});
	CHECK(iso.base().degree(4) == 0);
	CHECK(verify_1perfect(iso));
	std::vector<Vertex> edge{0, 1};
	auto house = orient_add_simplicial(c4_cyclic(), edge);
	CHECK(verify_1perfect(house));
	CHECK(house.out_neighbors(4) == edge);
	std::vector<Vertex> all{0, 1, 2};
	auto k4 = orient_add_simplicial(cyclic(complete_graph(3), {0, 1, 2}), all);
	CHECK(k4.base() == complete_graph(4));
	CHECK(verify_1perfect(k4));
	std::vector<Vertex> bad{0, 2};
	CHECK_THROWS_AS(orient_add_simplicial(c4_cyclic(), bad), std::invalid_argument);
}

TEST_CASE("duplicate_2branch_in_complement examples")
{
	Graph p3 = path_graph(3);
	auto r = duplicate_2branch_in_complement(complement(p3), {0, 1, 2});
	CHECK(r.result == complement(duplicate_2branch(p3, {0, 1, 2})));
	CHECK(verify_1perfect(r.orientation));
	CHECK(is_1po_bruteforce(r.result));

	Graph p4 = path_graph(4);
	auto q = duplicate_2branch_in_complement(complement(p4), {1, 2, 3});
	CHECK(q.result == complement(duplicate_2branch(p4, {1, 2, 3})));
	CHECK(verify_1perfect(q.orientation));
	CHECK(is_1po_bruteforce(q.result));

	CHECK(find_2branches(cycle_graph(5)).empty());
	CHECK_THROWS_AS(duplicate_2branch_in_complement(complement(cycle_graph(5)), {0, 1, 2}),
	                std::invalid_argument);
	// C6 with a pendant path: the complement contains complement(C6).
	Graph h(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {6, 7}});
	CHECK_THROWS_AS(duplicate_2branch_in_complement(complement(h), {0, 6, 7}), NotOnePerfect);
}

TEST_CASE("duplicate_2branch_in_complement on random inputs")
{
	std::mt19937_64 rng(77);
	int done = 0;
	while (done < 150) {
		auto [h, br] = random_with_2branch(rng);
		Graph g = complement(h);
		if (!is_1po(g))
			continue;
		auto r = duplicate_2branch_in_complement(g, br);
		CHECK(r.result == complement(duplicate_2branch(h, br)));
		CHECK(verify_1perfect(r.orientation));
		CHECK(validate_cover(r.result, r.cover, CoverMode::Inclusive));
		for (Vertex j = 0; j < g.order(); ++j) {
			const auto &s = r.maximal.sets[j];
			CHECK(h.is_independent(s));
			CHECK(std::count(s.begin(), s.end(), br.b) + std::count(s.begin(), s.end(), br.c) == 1);
		}
		++done;
	}
}

TEST_CASE("orient_contract_edge examples")
{
	for (const Edge &e : cycle_graph(4).edges()) {
		auto d = orient_contract_edge(c4_cyclic(), e);
		CHECK(d.base() == complete_graph(3));
		CHECK(verify_1perfect(d));
		for (Vertex v = 0; v < 3; ++v)
			CHECK(d.out_degree(v) == 1);
	}
	std::vector<Arc> k2{{0, 1}};
	CHECK(orient_contract_edge(Orientation(complete_graph(2), k2), Edge(0, 1)).base() == Graph(1));

	Graph bull(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
	Graph house(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}});
	for (const Graph &g : {bull, house})
		for (const Orientation &d : all_1perfect_orientations(g))
			for (const Edge &e : g.edges()) {
				auto r = orient_contract_edge(d, e);
				CHECK(r.base() == contract_edge(g, e));
				CHECK(verify_1perfect(r));
			}
	CHECK_THROWS_AS(orient_contract_edge(c4_cyclic(), Edge(0, 2)), std::invalid_argument);
}

TEST_CASE("contraction keeps directions away from the merged vertex")
{
	std::mt19937_64 rng(71);
	for (int i = 0; i < 200; ++i) {
		Graph g = test::random_1po_graph(2, 9, rng);
		if (g.size() == 0)
			continue;
		Orientation d = *recognize(g);
		auto edges = g.edges();
		Edge e = edges[rng() % edges.size()];
		auto r = orient_contract_edge(d, e);
		REQUIRE(verify_1perfect(r));
		for (const Arc &a : d.arcs()) {
			if (a.tail == e.u || a.tail == e.v || a.head == e.u || a.head == e.v)
				continue;
			CHECK(r.has_arc(merged_label(a.tail, e.u, e.v), merged_label(a.head, e.u, e.v)));
		}
	}
}

TEST_CASE("orient_delete_vertex")
{
	std::mt19937_64 rng(72);
	for (int i = 0; i < 100; ++i) {
		Graph g = test::random_1po_graph(1, 10, rng);
		Vertex v = Vertex(rng() % g.order());
		auto d = orient_delete_vertex(g, v);
		REQUIRE(d);
		CHECK(d->base() == delete_vertex(g, v));
		CHECK(verify_1perfect(*d));
	}
}

TEST_CASE("orient_join examples")
{
	CliqueBipartition c4parts{{0, 1}, {2, 3}};
	auto d = orient_join(c4_cyclic(), c4_cyclic(), c4parts, c4parts);
	CHECK(d.base() == join(cycle_graph(4), cycle_graph(4)));
	CHECK(verify_1perfect(d));

	std::vector<Arc> k2{{0, 1}};
	Orientation dk2(complete_graph(2), k2);
	CliqueBipartition k2parts{{0, 1}, {}};
	auto k4 = orient_join(dk2, dk2, k2parts, k2parts);
	CHECK(k4.base() == complete_graph(4));
	CHECK(verify_1perfect(k4));

	Orientation k1(Graph(1), {});
	CliqueBipartition one{{0}, {}};
	CHECK(orient_join(k1, k1, one, one).base() == complete_graph(2));

	CliqueBipartition wrong{{0, 2}, {1, 3}};
	CHECK_THROWS_AS(orient_join(c4_cyclic(), c4_cyclic(), wrong, c4parts), std::invalid_argument);
}

TEST_CASE("join_is_1po examples")
{
	CHECK(!join_is_1po(empty_graph(2), empty_graph(3)));
	std::mt19937_64 rng(73);
	for (int i = 0; i < 30; ++i)
		CHECK(join_is_1po(complete_graph(3), test::random_1po_graph(1, 8, rng)));
	CHECK(join_is_1po(cycle_graph(4), cycle_graph(4)));
}

TEST_CASE("join characterisation matches recognition (n1, n2 <= 4)")
{
	std::vector<Graph> small;
	for (int n = 1; n <= 4; ++n)
		test::for_each_labeled_graph(n, [&](const Graph &g) { small.push_back(g); });
	for (const Graph &a : small)
		for (const Graph &b : small) {
			bool expected = recognize(join(a, b)).has_value();
			REQUIRE(join_is_1po(a, b) == expected);
			if (expected) {
				auto d = orient_join(*recognize(a), *recognize(b));
				REQUIRE(d.base() == join(a, b));
				REQUIRE(verify_1perfect(d));
			}
		}
}

TEST_CASE("transforms preserve 1-perfectness on every orientation (n <= 5)")
{
	for (int n = 1; n <= 5; ++n)
		for (const Graph &g : test::graph_representatives(n))
			for_each_1perfect_orientation(g, [&](const Orientation &d) {
				REQUIRE(verify_1perfect(orient_add_universal(d)));
				for (Vertex w = 0; w < n; ++w)
					REQUIRE(verify_1perfect(orient_add_true_twin(d, w)));
				for (const Edge &e : g.edges()) {
					std::vector<Vertex> s{e.u, e.v};
					REQUIRE(verify_1perfect(orient_add_simplicial(d, s)));
					REQUIRE(verify_1perfect(orient_contract_edge(d, e)));
				}
				REQUIRE(verify_1perfect(orient_disjoint_union(d, d)));
				return true;
			});
}
