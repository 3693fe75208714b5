#pragma once

#include <string>
#include <utility>
#include <vector>

#include "walklab/numbers.hpp"

namespace walklab {

// Dense univariate polynomial over the rationals, coefficients stored
// lowest degree first with no trailing zeros. The zero polynomial has an
// empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly zero() { return Poly(); }
  static Poly constant(Rat c);
  static Poly x();
  // Convenience: integer coefficients, lowest degree first.
  static Poly from_ints(const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  // True when every coefficient is an integer.
  bool integral() const;

  // Coefficient of z^k (zero beyond the degree).
  const Rat& coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& z) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den);

  // Human-readable form, highest degree first, e.g. "z^3 - 4*z".
  std::string str(const std::string& var = "z") const;

 private:
  void strip();
  std::vector<Rat> c_;
};

// True iff a divides b exactly; a must be nonzero.
bool poly_divides(const Poly& a, const Poly& b);

}  // namespace walklab
