#pragma once

#include "opo/graph.hpp"

#include <functional>
#include <random>
#include <vector>

namespace opo::test {

// Every labelled graph on n vertices, by edge mask over the pairs i<j.
void for_each_labeled_graph(int n, const std::function<void(const Graph &)> &visit);

// One graph per isomorphism class, grown vertex by vertex and deduplicated
// by canonical form.
const std::vector<Graph> &graph_representatives(int n);

// Cographs on n vertices up to isomorphism, built as unions and joins of
// smaller ones.
const std::vector<Graph> &cograph_representatives(int n);

// Every bipartite graph with parts {0..p-1} and {p..n-1}, 0 <= p <= n/2.
void for_each_fixed_bipartite(int n, const std::function<void(const Graph &)> &visit);

Graph random_graph(int n, double p, std::mt19937_64 &rng);
std::vector<Vertex> random_permutation(int n, std::mt19937_64 &rng);

// A random graph that recognition accepts, n in [lo, hi].
Graph random_1po_graph(int lo, int hi, std::mt19937_64 &rng);

// Random partition of n into path orders.
std::vector<int> random_path_orders(int n, std::mt19937_64 &rng);

} // namespace opo::test
