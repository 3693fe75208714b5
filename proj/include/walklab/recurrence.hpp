#pragma once

#include <optional>
#include <vector>

#include "walklab/matrix.hpp"
#include "walklab/numbers.hpp"
#include "walklab/poly.hpp"

namespace walklab {

// Constant-coefficient linear recurrence y_t = c_1 y_{t-1} + ... + c_r y_{t-r}
// together with its characteristic polynomial z^r - c_1 z^{r-1} - ... - c_r.
struct RecurrenceSpec {
  int order = 0;
  std::vector<Rat> coeffs;  // c_1..c_r
  Poly charpoly;

  bool operator==(const RecurrenceSpec& o) const {
    return order == o.order && coeffs == o.coeffs && charpoly == o.charpoly;
  }
};

// Characteristic polynomial of the recurrence with the given coefficients.
Poly recurrence_charpoly(const std::vector<Rat>& coeffs);

// Minimal-order recurrence (order <= max_order) satisfied by the whole
// prefix, or nullopt when none fits. The prefix must contain at least
// 2*max_order terms so the answer is decidable; the minimal order equals
// the rank of the prefix's Hankel matrix.
std::optional<RecurrenceSpec> min_recurrence(const std::vector<Rat>& prefix,
                                             int max_order);

// Forward iteration: sequence of length upto+1 starting from seed.
// seed.size() must be at least spec.order.
std::vector<Rat> extend_recurrence(const RecurrenceSpec& spec,
                                   const std::vector<Rat>& seed, int upto);

// Square Hankel matrix h[i][j] = seq[i+j] of side floor((len+1)/2).
ExactMatrix hankel_matrix(const std::vector<Rat>& seq);

int hankel_rank(const std::vector<Rat>& seq);

}  // namespace walklab
