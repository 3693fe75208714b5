#include "walklab/walk_matrix.hpp"

namespace walklab {

ExactMatrix WalkMatrix::to_exact() const {
  const int nn = n();
  ExactMatrix m(nn, static_cast<int>(cols.size()));
  for (int k = 0; k < static_cast<int>(cols.size()); ++k)
    for (int v = 0; v < nn; ++v)
      m.at(v, k) = Rat(cols[static_cast<size_t>(k)][static_cast<size_t>(v)]);
  return m;
}

WalkMatrix walk_matrix(const Graph& g, const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("empty subset");
  const int n = g.n();
  WalkMatrix m;
  m.subset = subset;
  std::vector<Int> col(static_cast<size_t>(n), Int(0));
  for (int v : subset) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
    if (col[static_cast<size_t>(v)] != 0) throw std::invalid_argument("duplicate vertex");
    col[static_cast<size_t>(v)] = 1;
  }
  m.cols.push_back(col);
  for (int k = 1; k < n; ++k) {
    std::vector<Int> next(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      Int acc = 0;
      for (int w : g.neighbors(v)) acc += col[static_cast<size_t>(w)];
      next[static_cast<size_t>(v)] = std::move(acc);
    }
    col.swap(next);
    m.cols.push_back(col);
  }
  return m;
}

int walk_matrix_rank(const WalkMatrix& m) { return rank_exact(m.to_exact()); }

namespace {

Poly dependency_polynomial(const Graph& g, const std::vector<int>& subset) {
  const int n = g.n();
  // generate columns until the new one depends on the span of the others
  std::vector<std::vector<Int>> cols;
  std::vector<Int> col(static_cast<size_t>(n), Int(0));
  for (int v : subset) col.at(static_cast<size_t>(v)) = 1;
  for (int k = 0; k <= n; ++k) {
    // try to solve cols * a = col
    const int r = static_cast<int>(cols.size());
    if (r > 0) {
      ExactMatrix a(n, r);
      std::vector<Rat> b(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < r; ++j)
          a.at(i, j) = Rat(cols[static_cast<size_t>(j)][static_cast<size_t>(i)]);
        b[static_cast<size_t>(i)] = Rat(col[static_cast<size_t>(i)]);
      }
      if (auto sol = solve_linear(a, b)) {
        // col = sum_j sol[j] * cols[j]; charpoly z^r - a_1 z^{r-1} - ... - a_r
        // with a_i the weight of cols[r-i]
        std::vector<Rat> coeffs(static_cast<size_t>(r + 1));
        coeffs[static_cast<size_t>(r)] = 1;
        for (int j = 0; j < r; ++j)
          coeffs[static_cast<size_t>(j)] = -(*sol)[static_cast<size_t>(j)];
        Poly p{std::move(coeffs)};
        if (!p.integral())
          throw integrity_error("main polynomial coefficients are not integral");
        return p;
      }
    }
    cols.push_back(col);
    std::vector<Int> next(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      Int acc = 0;
      for (int w : g.neighbors(v)) acc += col[static_cast<size_t>(w)];
      next[static_cast<size_t>(v)] = std::move(acc);
    }
    col.swap(next);
  }
  throw integrity_error("no dependency among n+1 walk vectors");
}

}  // namespace

Poly main_polynomial(const Graph& g) {
  std::vector<int> all(static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) all[static_cast<size_t>(v)] = v;
  return dependency_polynomial(g, all);
}

Poly main_polynomial_for_subset(const Graph& g, const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("empty subset");
  return dependency_polynomial(g, subset);
}

}  // namespace walklab
