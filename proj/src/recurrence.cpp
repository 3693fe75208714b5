#include "walklab/recurrence.hpp"

namespace walklab {

Poly recurrence_charpoly(const std::vector<Rat>& coeffs) {
  const int r = static_cast<int>(coeffs.size());
  std::vector<Rat> c(static_cast<size_t>(r + 1));
  c[static_cast<size_t>(r)] = 1;
  for (int i = 1; i <= r; ++i)
    c[static_cast<size_t>(r - i)] = -coeffs[static_cast<size_t>(i - 1)];
  return Poly(std::move(c));
}

std::optional<RecurrenceSpec> min_recurrence(const std::vector<Rat>& prefix,
                                             int max_order) {
  if (max_order < 0) throw std::invalid_argument("negative max_order");
  const int len = static_cast<int>(prefix.size());
  if (len < 2 * max_order)
    throw std::invalid_argument("prefix shorter than 2*max_order");
  for (int r = 0; r <= max_order; ++r) {
    // y_t = sum_i c_i y_{t-i} for every t in [r, len)
    const int eqs = len - r;
    ExactMatrix a(eqs, r);
    std::vector<Rat> b(static_cast<size_t>(eqs));
    for (int t = r; t < len; ++t) {
      for (int i = 1; i <= r; ++i)
        a.at(t - r, i - 1) = prefix[static_cast<size_t>(t - i)];
      b[static_cast<size_t>(t - r)] = prefix[static_cast<size_t>(t)];
    }
    auto sol = solve_linear(a, b);
    if (sol) return RecurrenceSpec{r, *sol, recurrence_charpoly(*sol)};
  }
  return std::nullopt;
}

std::vector<Rat> extend_recurrence(const RecurrenceSpec& spec,
                                   const std::vector<Rat>& seed, int upto) {
  if (static_cast<int>(seed.size()) < spec.order)
    throw std::invalid_argument("seed shorter than recurrence order");
  std::vector<Rat> seq(seed);
  seq.reserve(static_cast<size_t>(upto + 1));
  while (static_cast<int>(seq.size()) <= upto) {
    Rat next = 0;
    const size_t t = seq.size();
    for (int i = 1; i <= spec.order; ++i)
      next += spec.coeffs[static_cast<size_t>(i - 1)] * seq[t - static_cast<size_t>(i)];
    seq.push_back(std::move(next));
  }
  seq.resize(static_cast<size_t>(upto + 1));
  return seq;
}

ExactMatrix hankel_matrix(const std::vector<Rat>& seq) {
  const int len = static_cast<int>(seq.size());
  const int side = (len + 1) / 2;
  ExactMatrix h(side, side);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) h.at(i, j) = seq[static_cast<size_t>(i + j)];
  return h;
}

int hankel_rank(const std::vector<Rat>& seq) {
  return rank_exact(hankel_matrix(seq));
}

}  // namespace walklab
