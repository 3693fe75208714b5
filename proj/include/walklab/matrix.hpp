#pragma once

#include <optional>
#include <vector>

#include "walklab/numbers.hpp"
#include "walklab/poly.hpp"

namespace walklab {

// Dense matrix with exact rational entries.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  }

  static ExactMatrix identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }

  Rat& at(int i, int j) { return e_[idx(i, j)]; }
  const Rat& at(int i, int j) const { return e_[idx(i, j)]; }

  bool operator==(const ExactMatrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && e_ == o.e_;
  }

 private:
  size_t idx(int i, int j) const {
    if (i < 0 || i >= r_ || j < 0 || j >= c_)
      throw std::out_of_range("matrix index");
    return size_t(i) * c_ + j;
  }
  int r_, c_;
  std::vector<Rat> e_;
};

// Rank over the rationals by exact Gaussian elimination.
int rank_exact(ExactMatrix m);

// One solution of A x = b with free variables set to zero, or nullopt when
// the system is inconsistent.
std::optional<std::vector<Rat>> solve_linear(const ExactMatrix& a,
                                             const std::vector<Rat>& b);

// Characteristic polynomial det(zI - A) of a square integer matrix via the
// Faddeev-LeVerrier recurrence. Intermediate values stay integral; the
// exact trace divisions are asserted.
Poly char_poly(const ExactMatrix& a);

}  // namespace walklab
