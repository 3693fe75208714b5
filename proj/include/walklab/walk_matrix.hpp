#pragma once

#include <vector>

#include "walklab/graph.hpp"
#include "walklab/matrix.hpp"
#include "walklab/poly.hpp"

namespace walklab {

// n x n integer matrix whose columns are the adjacency powers applied to
// the indicator vector of S: column k holds the counts of length-k walks
// from each vertex into S.
struct WalkMatrix {
  std::vector<int> subset;
  std::vector<std::vector<Int>> cols;  // cols[k][v], k = 0..n-1

  int n() const { return static_cast<int>(cols.empty() ? 0 : cols[0].size()); }
  ExactMatrix to_exact() const;
};

WalkMatrix walk_matrix(const Graph& g, const std::vector<int>& subset);

int walk_matrix_rank(const WalkMatrix& m);

// Monic polynomial of the first linear dependency among the columns
// j_S, A j_S, A^2 j_S, ...; for S = V(G) this is the main polynomial of
// the graph. The coefficients must come out integral and this is asserted.
Poly main_polynomial(const Graph& g);
Poly main_polynomial_for_subset(const Graph& g, const std::vector<int>& subset);

}  // namespace walklab
