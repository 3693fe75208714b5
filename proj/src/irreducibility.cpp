#include "walklab/irreducibility.hpp"

#include <algorithm>

namespace walklab {

namespace {

// Polynomials over F_q as coefficient vectors, lowest degree first, q < 2^15.
using FpPoly = std::vector<long>;

void fp_strip(FpPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, long q) {
  if (a.empty() || b.empty()) return {};
  FpPoly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
  }
  // reduce: mod is monic
  const size_t dm = mod.size() - 1;
  for (size_t k = prod.size(); k-- > dm;) {
    long c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (size_t i = 0; i < dm; ++i)
      prod[k - dm + i] = ((prod[k - dm + i] - c * mod[i]) % q + q) % q;
  }
  prod.resize(dm);
  fp_strip(prod);
  return prod;
}

FpPoly fp_powmod(FpPoly base, long e, const FpPoly& mod, long q) {
  FpPoly result{1};
  while (e > 0) {
    if (e & 1) result = fp_mulmod(result, base, mod, q);
    base = fp_mulmod(base, base, mod, q);
    e >>= 1;
  }
  return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long q) {
  fp_strip(a);
  fp_strip(b);
  while (!b.empty()) {
    // a mod b
    long inv_lead = 1;
    {
      // Fermat inverse of b's leading coefficient
      long lb = b.back();
      long e = q - 2, acc = 1, base = lb;
      while (e > 0) {
        if (e & 1) acc = acc * base % q;
        base = base * base % q;
        e >>= 1;
      }
      inv_lead = acc;
    }
    while (a.size() >= b.size()) {
      long c = a.back() * inv_lead % q;
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = ((a[shift + i] - c * b[i]) % q + q) % q;
      fp_strip(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// True iff p (monic, integral, degree n >= 1) is irreducible mod q: no
// irreducible factor of degree <= n/2, detected via gcd(x^{q^i} - x, p).
bool irreducible_mod(const Poly& p, long q) {
  const int n = p.degree();
  FpPoly pm(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    Int num = p.coeff(i).get_num();
    long r = static_cast<long>(mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(q)));
    pm[static_cast<size_t>(i)] = r;
  }
  if (n == 1) return true;
  FpPoly frob{0, 1};  // x
  for (int i = 1; i <= n / 2; ++i) {
    frob = fp_powmod(frob, q, pm, q);  // x^{q^i} mod p
    FpPoly diff = frob;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % q + q) % q;
    fp_strip(diff);
    FpPoly g = fp_gcd(pm, diff, q);
    if (g.size() != 1) return false;  // nontrivial common factor
  }
  return true;
}

}  // namespace

const std::vector<long>& primes_below_100() {
  static const std::vector<long> primes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                           29, 31, 37, 41, 43, 47, 53, 59, 61,
                                           67, 71, 73, 79, 83, 89, 97};
  return primes;
}

IrreducibilityCertificate irreducibility_certificate(
    const Poly& p, const std::vector<long>& primes) {
  if (p.degree() < 1 || !p.is_monic() || !p.integral())
    throw std::invalid_argument("certificate needs a monic integer polynomial of degree >= 1");
  IrreducibilityCertificate cert;
  if (p.degree() == 1) {
    cert.verdict = IrreducibilityCertificate::Verdict::Irreducible;
    cert.witness_prime = 0;
    return cert;
  }
  // Rational-root test: monic, so any rational root is an integer dividing
  // the constant term.
  Int c0 = p.coeff(0).get_num();
  if (c0 == 0) {
    cert.verdict = IrreducibilityCertificate::Verdict::Reducible;
    cert.factor = Poly::x();
    return cert;
  }
  Int abs_c0 = abs(c0);
  // Enumerate divisors by trial division; cap the scan for huge constants
  // (the certificate stays one-sided either way).
  std::vector<Int> divisors;
  Int limit = 2000000;
  for (Int d = 1; d * d <= abs_c0 && d <= limit; ++d) {
    if (abs_c0 % d == 0) {
      divisors.push_back(d);
      divisors.push_back(abs_c0 / d);
    }
  }
  for (const Int& d : divisors) {
    for (int sign : {1, -1}) {
      Rat root = Rat(sign * d);
      if (p.eval(root) == 0) {
        cert.verdict = IrreducibilityCertificate::Verdict::Reducible;
        cert.factor = Poly({-root, Rat(1)});
        return cert;
      }
    }
  }
  for (long q : primes) {
    cert.primes_tried.push_back(q);
    if (irreducible_mod(p, q)) {
      cert.verdict = IrreducibilityCertificate::Verdict::Irreducible;
      cert.witness_prime = q;
      return cert;
    }
  }
  cert.verdict = IrreducibilityCertificate::Verdict::Inconclusive;
  return cert;
}

}  // namespace walklab
