#include "walklab/poly.hpp"

#include <sstream>

namespace walklab {

namespace {
const Rat kZero = 0;
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

void Poly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Rat c) {
  std::vector<Rat> v;
  v.push_back(std::move(c));
  return Poly(std::move(v));
}

Poly Poly::x() { return Poly({Rat(0), Rat(1)}); }

Poly Poly::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

bool Poly::is_monic() const { return !c_.empty() && c_.back() == 1; }

bool Poly::integral() const {
  for (const Rat& c : c_)
    if (!is_integer(c)) return false;
  return true;
}

const Rat& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

Rat Poly::eval(const Rat& z) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& s) const {
  std::vector<Rat> v(c_);
  for (Rat& c : v) c *= s;
  return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("poly division by zero");
  std::vector<Rat> rem(num.c_);
  int dn = num.degree(), dd = den.degree();
  if (dn < dd) return {Poly(), num};
  std::vector<Rat> quo(static_cast<size_t>(dn - dd + 1), Rat(0));
  const Rat& lead = den.c_.back();
  for (int k = dn - dd; k >= 0; --k) {
    Rat q = rem[static_cast<size_t>(k + dd)] / lead;
    if (q == 0) continue;
    quo[static_cast<size_t>(k)] = q;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<size_t>(k + i)] -= q * den.c_[static_cast<size_t>(i)];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeff(k);
    if (c == 0) continue;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      os << dec(a);
    } else {
      if (a != 1) os << dec(a) << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

bool poly_divides(const Poly& a, const Poly& b) {
  if (a.is_zero()) throw std::invalid_argument("divisibility by zero polynomial");
  return Poly::divrem(b, a).second.is_zero();
}

}  // namespace walklab
