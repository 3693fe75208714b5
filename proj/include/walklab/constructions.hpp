#pragma once

#include <utility>
#include <vector>

#include "walklab/fixtures.hpp"
#include "walklab/graph.hpp"

namespace walklab {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);

// P_{n-2} with two extra leaves attached to its last vertex; the mark u is
// the remaining degree-1 end of the long path. n >= 4.
Fixture y_graph(int n);

// Cycle C_cycle_len plus a path P_s joined to it by one edge. The cycle is
// 0..cycle_len-1, the path follows, the joining edge is {0, cycle_len}.
Graph tadpole(int cycle_len, int s);

// Identify the two roots; G keeps its numbering, H's vertices follow with
// its root removed. The merged vertex is the result's root.
RootedGraph coalescence(const RootedGraph& g, const RootedGraph& h);

// Join both roots to a fresh vertex w, which becomes the result's root.
RootedGraph graftage(const RootedGraph& g, const RootedGraph& h);

// The 11-vertex tree with a pseudosimilar pair, marks x and y.
Fixture harary_palmer();

// The 9-vertex tree with a closed-walk-equivalent, non-walk-equivalent
// pair, marks x and y.
Fixture schwenk_graph();

// Removal-similar pair from a unicyclic graph with an order-3 rotation:
// returns U minus v with marks x = alpha(v), y = alpha^2(v). Preconditions
// (unicyclic connected, alpha an automorphism of order 3, v on the cycle
// with degree 2) are validated individually.
Fixture hp_construct(const Graph& u, const std::vector<int>& alpha, int v);

// The vertices of U's unique cycle.
std::vector<int> cycle_vertices(const Graph& unicyclic);

// A pair of graphs whose degree-1 vertices have equal walk counts far
// beyond their level of non-isomorphism. Each graph is a chain of t-1
// tadpole blocks plus a head block; the auxiliary coloring drives the
// locality arguments and is recorded for the claim verifiers.
struct KvPair {
  Fixture g;  // marks: v (degree-1 vertex), c (apex above the cut level)
  Fixture h;  // marks: u, cp, cpp (the two apexes above the cut level)
  std::vector<int> colors_g;
  std::vector<int> colors_h;
  int s = 0, t = 0;
  int level = 0;  // t(s+4) - 2, the last level where the graphs agree
  // vertex set of the tadpole copy inside g's head block
  std::vector<int> g_head_tadpole;
};

KvPair krebs_verbitsky(int s, int t);

// Attach target_n - n fresh leaves to each mark; both fixtures must have
// equal vertex count n <= target_n.
std::pair<Fixture, Fixture> pad_with_pendants(const Fixture& g, const std::string& g_mark,
                                              const Fixture& h, const std::string& h_mark,
                                              int target_n);

}  // namespace walklab
