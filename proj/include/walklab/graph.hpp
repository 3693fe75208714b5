#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "walklab/numbers.hpp"

namespace walklab {

// Undirected simple graph on vertices 0..n-1. Adjacency is kept both as
// sorted neighbor lists (iteration) and bit rows (O(1) edge queries).
// Graphs are built once via add_edge and treated as immutable afterwards.
class Graph {
 public:
  explicit Graph(int n);

  int n() const { return n_; }
  int edge_count() const { return edges_; }

  void add_edge(int u, int v);

  bool has_edge(int u, int v) const {
    check(u);
    check(v);
    return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] >>
            (v & 63)) & 1;
  }

  int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }

  // Bit row of vertex v, (n+63)/64 words.
  const uint64_t* row_bits(int v) const {
    return bits_.data() + static_cast<size_t>(check(v)) * words_;
  }
  int words() const { return static_cast<int>(words_); }

  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> degree_sequence() const;  // ascending

  bool connected() const;
  bool is_tree() const { return edges_ == n_ - 1 && connected(); }
  bool is_forest() const;

  // BFS distances from src; unreachable vertices get -1.
  std::vector<int> bfs_distances(int src) const;

  // Validates simplicity and adjacency symmetry of the internal structures.
  bool check_invariants() const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }

 private:
  size_t check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    return static_cast<size_t>(v);
  }
  int n_;
  int edges_ = 0;
  size_t words_;
  std::vector<std::vector<int>> adj_;
  std::vector<uint64_t> bits_;
};

struct RootedGraph {
  Graph graph;
  int root;
};

// Graph on n-1 vertices after removing v; remaining vertices are
// renumbered preserving order. Requires n >= 2.
Graph vertex_deleted(const Graph& g, int v);

// Induced subgraph on the given (sorted, distinct) vertex set. When
// old_to_new is supplied it receives the renumbering (-1 for dropped).
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::vector<int>* old_to_new = nullptr);

// Disjoint union; the second operand's vertices are shifted by g.n().
Graph disjoint_union(const Graph& g, const Graph& h);

// Disjoint union of G and H plus the edge {u in G, v in H}.
Graph edge_join(const Graph& g, int u, const Graph& h, int v);

// Relabeled copy: vertex v becomes perm[v]; perm must be a permutation.
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace walklab
