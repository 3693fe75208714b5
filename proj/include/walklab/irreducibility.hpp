#pragma once

#include <vector>

#include "walklab/poly.hpp"

namespace walklab {

// One-sided irreducibility certificate for monic integer polynomials,
// irreducibility meant over the rationals.
//   Irreducible: the polynomial is irreducible modulo witness_prime
//                (hence over Q); degree-1 inputs carry witness_prime 0.
//   Reducible:   factor is a nontrivial exact divisor found by the
//                rational-root test.
//   Inconclusive: no verdict; never wrong, only uninformative.
struct IrreducibilityCertificate {
  enum class Verdict { Irreducible, Reducible, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  long witness_prime = 0;
  Poly factor;
  std::vector<long> primes_tried;

  bool irreducible() const { return verdict == Verdict::Irreducible; }
  bool reducible() const { return verdict == Verdict::Reducible; }
};

// Primes below 100, the default witness pool.
const std::vector<long>& primes_below_100();

IrreducibilityCertificate irreducibility_certificate(
    const Poly& p, const std::vector<long>& primes = primes_below_100());

}  // namespace walklab
