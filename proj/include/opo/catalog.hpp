#pragma once

#include "opo/graph.hpp"

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opo {

enum class Provenance { Generated, BundledFigureData };

struct CatalogEntry
{
	std::string name;
	Graph graph;
	Provenance provenance = Provenance::Generated;
};

class CatalogError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

// Complement of C_{2k}, k >= 3.
Graph gen_f3(int k);
// Complement of K_2 + C_{2k+1}, k >= 1. The K_2 takes labels 0 and 1.
Graph gen_f4(int k);

// F1, F2, F5, ..., F12.
const std::vector<std::string> &bundled_names();

// Parses "[name]" blocks each followed by an edge list.
std::map<std::string, Graph> parse_catalog(std::string_view text);
// Text compiled into the library from data/catalog.txt.
std::string_view bundled_catalog_text();

// Loads and validates; throws CatalogError when the entry is missing or
// fails its validation predicate.
CatalogEntry load_bundled(std::string_view name);
CatalogEntry load_bundled(std::string_view name, std::string_view catalog_text);

// Predicates checked for bundled entries: F1/F2 triangle-free with more
// edges than vertices; F5..F12 co-bipartite with the recorded orders; all
// not 1-p.o. Returns an empty string on success, else the failure.
std::string validation_failure(const CatalogEntry &entry);

// Every catalog entry: the bundled ones plus F3(k), F4(k) for the
// requested parameter ranges.
std::vector<CatalogEntry> catalog_entries(int f3_max_k = 4, int f4_max_k = 2);

struct MinimalityReport
{
	bool forbidden = false;                // the graph itself is not 1-p.o.
	int deletions_checked = 0;
	int contractions_checked = 0;
	std::vector<Vertex> failing_deletions; // G - v not 1-p.o.
	std::vector<Edge> failing_contractions;

	bool minimal() const
	{
		return forbidden && failing_deletions.empty() && failing_contractions.empty();
	}
};

MinimalityReport verify_minimal_forbidden(const Graph &g);

struct MinorGuard
{
	int max_minor_order = 6;
	int max_host_order = 12;
};

// Branch sets: parts[i] is a connected vertex set of g realising vertex i
// of h; parts are adjacent in g exactly when the h-vertices are.
using MinorModel = std::vector<std::vector<Vertex>>;

class MinorGuardExceeded : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

// Exhaustive search over connected-partition embeddings.
std::optional<MinorModel> contains_induced_minor(const Graph &g, const Graph &h, MinorGuard guard = {});
bool is_minor_model(const Graph &g, const Graph &h, const MinorModel &model);

// Test corpus generators.
Graph random_tree(int n, std::mt19937_64 &rng);
// Random tree plus one extra edge: connected with exactly one cycle.
Graph random_unicyclic(int n, std::mt19937_64 &rng);
Graph random_chordal(int n, std::mt19937_64 &rng);
// Disjoint union of paths with the given vertex counts.
Graph linear_forest(const std::vector<int> &path_orders);

} // namespace opo
