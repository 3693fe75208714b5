#pragma once

#include <functional>
#include <string>
#include <vector>

#include "walklab/equivalence.hpp"
#include "walklab/graph.hpp"
#include "walklab/irreducibility.hpp"
#include "walklab/poly.hpp"

namespace walklab {

// Exactly one representative per isomorphism class of free trees on n
// vertices: rooted level sequences in reverse lexicographic order,
// filtered to those rooted at the canonical centre.
void enumerate_trees(int n, const std::function<void(const Graph&)>& emit);
std::vector<Graph> all_trees(int n);

// One representative per isomorphism class of connected graphs on n
// vertices (edge-mask sweep with orbit marking); n <= 7.
std::vector<Graph> enumerate_connected_graphs(int n);

struct CensusRecord {
  std::string cls;  // "tree" or "graph"
  int n = 0;
  int index = 0;
  std::string graph6;
  std::string profile_key;  // hash of the full profile matrix

  std::string to_json_line() const;
};

// Trees sharing the full walk-count matrix (rows sorted, lengths < 2n).
struct CollisionClass {
  int n = 0;
  std::vector<std::string> graph6;  // the colliding trees
};

struct IdentifiabilityReport {
  int n_max = 0;
  std::vector<CollisionClass> collisions;  // empty = all walk-identifiable
};

IdentifiabilityReport walk_identifiability_census(int n_max);

// A pair of vertices in non-isomorphic same-order trees (or non-similar in
// one tree) with equal walk rows; strong records whether the closed rows
// match as well.
struct AmbivalentMatch {
  std::string t_graph6, s_graph6;
  int x = 0, y = 0;
  bool same_tree = false;
  bool strong = false;
};

std::vector<AmbivalentMatch> ambivalent_vertex_census(int n);

enum class CrossMode { Walk, Closed, Strong };

// Vertex matches across trees of different orders, compared on the first
// n_small + n_large counts. Sizes run over small < large <= large_max with
// small <= small_max.
struct CrossSizeMatch {
  int n_small = 0, n_large = 0;
  std::string small_graph6, large_graph6;
  int small_vertex = 0, large_vertex = 0;
};

std::vector<CrossSizeMatch> cross_size_census(int small_max, int large_max,
                                              CrossMode mode);

// Distinct unordered tree pairs in a match list.
int distinct_tree_pairs(const std::vector<CrossSizeMatch>& matches);

// No other universe member shares the characteristic polynomial.
bool determined_by_spectrum(const Graph& g, std::span<const Graph> universe);

// For every connected n-vertex graph: spectral determination, the
// irreducibility certificate, and (when both hold) the verdict of every
// vertex, which must be Decisive.
struct DecisiveCensusRow {
  std::string graph6;
  bool determined_by_spectrum = false;
  bool irreducible = false;
  int decisive_vertices = 0;
};

struct DecisiveCensusReport {
  int n = 0;
  int graphs = 0;
  int ds_count = 0;
  int irreducible_count = 0;
  int hypothesis_count = 0;  // both conditions
  int violations = 0;        // hypothesis graphs with a non-decisive vertex
  std::vector<DecisiveCensusRow> rows;
};

DecisiveCensusReport decisive_census(int n);

}  // namespace walklab
