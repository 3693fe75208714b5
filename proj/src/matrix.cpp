#include "walklab/matrix.hpp"

namespace walklab {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

int rank_exact(ExactMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const Rat lead = m.at(rank, col);
    for (int i = rank + 1; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) / lead;
      m.at(i, col) = 0;
      for (int j = col + 1; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rat>> solve_linear(const ExactMatrix& a,
                                             const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("rhs size mismatch");
  int rows = a.rows(), cols = a.cols();
  ExactMatrix m(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, cols) = b[static_cast<size_t>(i)];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int i = row; i < rows; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = col; j <= cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    const Rat lead = m.at(row, col);
    for (int j = col; j <= cols; ++j) m.at(row, j) /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j <= cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (m.at(i, cols) != 0) return std::nullopt;
  std::vector<Rat> x(static_cast<size_t>(cols), Rat(0));
  for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
    x[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = m.at(i, cols);
  return x;
}

Poly char_poly(const ExactMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("char_poly needs a square matrix");
  const int n = a.rows();
  std::vector<Int> A(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& e = a.at(i, j);
      if (!is_integer(e))
        throw std::invalid_argument("char_poly needs integer entries");
      A[size_t(i) * n + j] = e.get_num();
    }
  // p(z) = z^n + c[n-1] z^{n-1} + ... + c[0]
  std::vector<Int> c(static_cast<size_t>(n));
  if (n == 0) return Poly::constant(Rat(1));
  std::vector<Int> M = A;  // M_1 = A
  auto trace = [&](const std::vector<Int>& m) {
    Int t = 0;
    for (int i = 0; i < n; ++i) t += m[size_t(i) * n + i];
    return t;
  };
  c[static_cast<size_t>(n - 1)] = -trace(M);
  std::vector<Int> next(size_t(n) * n);
  for (int k = 2; k <= n; ++k) {
    // M_k = A * (M_{k-1} + c[n-k+1] * I)
    const Int& shift = c[static_cast<size_t>(n - k + 1)];
    for (int i = 0; i < n; ++i) M[size_t(i) * n + i] += shift;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int acc = 0;
        for (int l = 0; l < n; ++l)
          if (A[size_t(i) * n + l] != 0) acc += A[size_t(i) * n + l] * M[size_t(l) * n + j];
        next[size_t(i) * n + j] = acc;
      }
    M.swap(next);
    Int t = -trace(M);
    Int ck;
    mpz_divexact_ui(ck.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    if (ck * k != t) throw integrity_error("charpoly trace division not exact");
    c[static_cast<size_t>(n - k)] = ck;
  }
  std::vector<Rat> coeffs(static_cast<size_t>(n + 1));
  for (int i = 0; i < n; ++i) coeffs[static_cast<size_t>(i)] = Rat(c[static_cast<size_t>(i)]);
  coeffs[static_cast<size_t>(n)] = 1;
  return Poly(std::move(coeffs));
}

}  // namespace walklab
