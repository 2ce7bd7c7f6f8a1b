#include "support.hpp"

#include "opo/canonical.hpp"
#include "opo/catalog.hpp"
#include "opo/cobipartite.hpp"
#include "opo/io.hpp"
#include "opo/recognition.hpp"

#include <doctest.h>

#include <set>

using namespace opo;

TEST_CASE("gen_f3 examples")
{
	CHECK(gen_f3(3) == complement(cycle_graph(6)));
	CHECK(!recognize(gen_f3(3)));
	CHECK(gen_f3(4) == complement(cycle_graph(8)));
	CHECK(!recognize(gen_f3(4)));
	CHECK_THROWS_AS(gen_f3(2), std::invalid_argument);
	CHECK(recognize(complement(cycle_graph(4))));
}

TEST_CASE("gen_f4 examples")
{
	CHECK(gen_f4(1) == join(empty_graph(2), empty_graph(3)));
	CHECK(gen_f4(1) == complete_bipartite(2, 3));
	CHECK(!recognize(gen_f4(2)));
	CHECK(gen_f4(2).order() == 7);
	CHECK_THROWS_AS(gen_f4(0), std::invalid_argument);
}

TEST_CASE("generated families are minimal forbidden (k <= 5)")
{
	for (int k = 3; k <= 5; ++k) {
		Graph f = gen_f3(k);
		CHECK(find_clique_bipartition(f));
		CHECK(verify_minimal_forbidden(f).minimal());
	}
	for (int k = 1; k <= 5; ++k)
		CHECK(verify_minimal_forbidden(gen_f4(k)).minimal());
}

TEST_CASE("bundled entries")
{
	auto f9 = load_bundled("F9");
	CHECK(f9.graph.order() == 9);
	CHECK(f9.provenance == Provenance::BundledFigureData);
	CHECK(find_clique_bipartition(f9.graph));
	CHECK(!recognize(f9.graph));

	auto f1 = load_bundled("F1");
	CHECK(!recognize(f1.graph));
	CHECK(f1.graph.size() > f1.graph.order());
	CHECK(load_bundled("F11").graph.order() == 12);

	std::vector<int> orders{6, 7, 10, 10, 10, 10, 9, 10, 12, 12};
	const auto &names = bundled_names();
	REQUIRE(names.size() == orders.size());
	std::set<std::string> forms;
	for (std::size_t i = 0; i < names.size(); ++i) {
		auto e = load_bundled(names[i]);
		CHECK(e.graph.order() == orders[i]);
		CHECK(validation_failure(e).empty());
		forms.insert(to_graph6(canonical_form(e.graph)));
	}
	CHECK(forms.size() == names.size());
	CHECK_THROWS_AS(load_bundled("F13"), CatalogError);
}

TEST_CASE("bundled entries are minimal forbidden induced minors")
{
	for (const auto &name : bundled_names()) {
		auto r = verify_minimal_forbidden(load_bundled(name).graph);
		CHECK_MESSAGE(r.minimal(), name);
		CHECK(r.deletions_checked == load_bundled(name).graph.order());
	}
}

TEST_CASE("catalog entries differ from the generated families")
{
	for (const auto &name : bundled_names()) {
		Graph g = load_bundled(name).graph;
		for (int k = 3; 2 * k <= g.order(); ++k)
			if (2 * k == g.order())
				CHECK(!isomorphic(g, gen_f3(k)));
	}
}

TEST_CASE("transcription errors fail loudly")
{
	std::string bad = "[F9]\n3 1\n0 1\n";
	CHECK_THROWS_AS(load_bundled("F9", bad), CatalogError);
	std::string good_but_1po = "[F1]\n6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";
	CHECK_THROWS_AS(load_bundled("F1", good_but_1po), CatalogError);
	CHECK_THROWS_AS(parse_catalog("[F1]\n2 1\n0 0\n"), CatalogError);
	CHECK_THROWS_AS(parse_catalog("2 1\n0 1\n"), CatalogError);
	CHECK_THROWS_AS(parse_catalog("[A]\n1 0\n[A]\n1 0\n"), CatalogError);
	auto m = parse_catalog("# x\n[A]\n1 0\n\n[B]\n2 1\n0 1\n");
	CHECK(m.size() == 2);
	CHECK(m.at("B") == complete_graph(2));
}

TEST_CASE("verify_minimal_forbidden examples")
{
	auto k = verify_minimal_forbidden(complete_bipartite(2, 3));
	CHECK(k.minimal());
	CHECK(k.deletions_checked == 5);
	CHECK(k.contractions_checked == 6);
	CHECK(verify_minimal_forbidden(gen_f3(3)).minimal());
	auto c6 = verify_minimal_forbidden(cycle_graph(6));
	CHECK(!c6.forbidden);
	CHECK(!c6.minimal());
	// K23 with a pendant vertex is forbidden but not minimal.
	Graph big(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 4}, {4, 5}});
	auto b = verify_minimal_forbidden(big);
	CHECK(b.forbidden);
	CHECK(b.failing_deletions == std::vector<Vertex>{5});
	CHECK(!b.minimal());
}

TEST_CASE("contains_induced_minor examples")
{
	Graph k23p(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 4}, {4, 5}});
	auto m = contains_induced_minor(k23p, complete_bipartite(2, 3));
	REQUIRE(m);
	CHECK(is_minor_model(k23p, complete_bipartite(2, 3), *m));

	auto c = contains_induced_minor(cycle_graph(6), cycle_graph(4));
	REQUIRE(c);
	CHECK(is_minor_model(cycle_graph(6), cycle_graph(4), *c));

	CHECK(!contains_induced_minor(complete_graph(4), complete_bipartite(2, 3)));
	CHECK(!contains_induced_minor(cycle_graph(6), complete_graph(4)));
	CHECK(!contains_induced_minor(path_graph(6), cycle_graph(3)));
	CHECK(contains_induced_minor(cycle_graph(6), cycle_graph(3)));
	CHECK_THROWS_AS(contains_induced_minor(Graph(13), Graph(1)), MinorGuardExceeded);
	CHECK_THROWS_AS(contains_induced_minor(Graph(8), Graph(7)), MinorGuardExceeded);
}

TEST_CASE("induced minors found by search are reachable by deletions and contractions")
{
	std::mt19937_64 rng(81);
	for (int i = 0; i < 60; ++i) {
		Graph g = test::random_graph(4 + int(rng() % 4), 0.5, rng);
		// Build h by random deletions and contractions of g.
		Graph h = g;
		int steps = 1 + int(rng() % 3);
		for (int s = 0; s < steps && h.order() > 1; ++s) {
			auto edges = h.edges();
			if (!edges.empty() && rng() % 2)
				h = contract_edge(h, edges[rng() % edges.size()]);
			else
				h = delete_vertex(h, Vertex(rng() % h.order()));
		}
		if (h.order() > 6)
			continue;
		auto m = contains_induced_minor(g, h);
		REQUIRE(m);
		CHECK(is_minor_model(g, h, *m));
	}
}

TEST_CASE("1-p.o. generators")
{
	for (int k = 1; k <= 5; ++k)
		CHECK(recognize(complement(cycle_graph(2 * k + 1))));
	std::mt19937_64 rng(82);
	for (int i = 0; i < 100; ++i) {
		int n = 1 + int(rng() % 10);
		Graph g = complement(linear_forest(test::random_path_orders(n, rng)));
		CHECK(g.order() == n);
		CHECK(recognize(g));
	}
	for (int i = 0; i < 100; ++i) {
		Graph u = random_unicyclic(3 + int(rng() % 12), rng);
		CHECK(u.is_connected());
		CHECK(u.size() == u.order());
		CHECK(recognize(u));
		Graph t = random_tree(1 + int(rng() % 12), rng);
		CHECK(t.size() == t.order() - 1);
		CHECK(t.is_connected());
	}
	CHECK(linear_forest({3, 1, 2}) == Graph(6, {{0, 1}, {1, 2}, {4, 5}}));
}

TEST_CASE("random chordal graphs have perfect elimination orderings")
{
	std::mt19937_64 rng(83);
	for (int i = 0; i < 100; ++i) {
		Graph g = random_chordal(1 + int(rng() % 14), rng);
		// Repeatedly strip a simplicial vertex.
		std::vector<Vertex> alive(g.order());
		for (Vertex v = 0; v < g.order(); ++v)
			alive[v] = v;
		while (!alive.empty()) {
			Graph h = g.induced(alive);
			int found = -1;
			for (Vertex v = 0; v < h.order() && found < 0; ++v) {
				auto nb = h.neighbors(v);
				if (h.is_clique(nb))
					found = v;
			}
			REQUIRE(found >= 0);
			alive.erase(alive.begin() + found);
		}
		CHECK(enumerate_chordless_cycles(g, 4).empty());
	}
}
