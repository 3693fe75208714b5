#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "walklab/graph.hpp"
#include "walklab/isomorphism.hpp"
#include "walklab/walks.hpp"

namespace walklab {

// Equality of walk invariants, decided by comparing the first n+m counts;
// for connected operands this settles the whole infinite sequence. Both
// graphs must be connected.
bool walk_equivalent(const Graph& g, int v, const Graph& h, int u);
bool closed_walk_equivalent(const Graph& g, int v, const Graph& h, int u);
bool strongly_walk_equivalent(const Graph& g, int v, const Graph& h, int u);

bool removal_similar(const Graph& g, int x, int y,
                     long node_budget = kDefaultIsoBudget);
bool pseudosimilar(const Graph& g, int x, int y,
                   long node_budget = kDefaultIsoBudget);

// Equal characteristic polynomials of the two vertex-deleted subgraphs --
// the spectral route, deliberately independent of the walk-count route.
bool cospectral_vertices(const Graph& g, int x, int y);

// Classification of a vertex pair. Within one graph the implication
// lattice (similar => removal_similar => walk_eq and cospectral;
// cospectral <=> closed_walk_eq) is enforced and a violation raises
// integrity_error, making every classification a live cross-check of the
// two computation routes.
struct PairVerdict {
  bool walk_eq = false;
  bool closed_walk_eq = false;
  bool removal_similar = false;
  bool similar = false;  // across graphs: rooted isomorphism
  bool cospectral = false;

  std::string str() const;
};

PairVerdict classify_pair(const Graph& g, int x, const Graph& h, int y,
                          long node_budget = kDefaultIsoBudget);
inline PairVerdict classify_pair(const Graph& g, int x, int y,
                                 long node_budget = kDefaultIsoBudget) {
  return classify_pair(g, x, g, y, node_budget);
}

// Universe of same-order connected graphs with all walk/closed-walk rows
// precomputed at threshold 2n and bucketed for O(1) match lookup, so a
// census pays the profile cost once.
class UniverseIndex {
 public:
  UniverseIndex(std::vector<Graph> graphs, std::string name);

  const std::vector<Graph>& graphs() const { return graphs_; }
  const std::string& name() const { return name_; }
  int order() const { return order_; }

  const std::vector<Int>& w_row(int gi, int v) const;
  const std::vector<Int>& r_row(int gi, int v) const;
  // (graph index, vertex) pairs whose row equals the given one.
  std::vector<std::pair<int, int>> w_matches(const std::vector<Int>& row) const;
  std::vector<std::pair<int, int>> r_matches(const std::vector<Int>& row) const;

 private:
  std::vector<Graph> graphs_;
  std::string name_;
  int order_ = 0;
  std::vector<std::vector<std::vector<Int>>> w_, r_;
  std::map<std::string, std::vector<std::pair<int, int>>> wkey_, rkey_;
};

// Status of a vertex against an explicit universe of same-order connected
// graphs. Decisive: every joint profile match in the universe is a rooted
// isomorphism. Ambivalent: some non-isomorphic member matches both
// profiles (that member and vertex are the witness). The per-invariant
// flags are reported alongside.
struct VertexVerdict {
  enum class Status { Decisive, Ambivalent, NeitherDetermined };
  Status status = Status::Decisive;
  std::optional<RootedGraph> witness;
  bool w_decisive = true;
  bool r_decisive = true;
  std::string universe;

  std::string to_json(const Graph& g, int v) const;
};

VertexVerdict vertex_verdict(const Graph& g, int v, const UniverseIndex& universe);
VertexVerdict vertex_verdict(const Graph& g, int v, std::span<const Graph> universe,
                             const std::string& universe_name = "");

// Closed-walk triples of every vertex plus the classes that collide; an
// empty collision list means the triples label the graph canonically.
struct TripleLabeling {
  std::vector<ClosedTriple> triples;
  std::vector<std::vector<int>> collisions;
};

TripleLabeling canonical_triple_labeling(const Graph& g);

}  // namespace walklab
