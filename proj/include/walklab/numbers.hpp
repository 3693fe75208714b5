#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace walklab {

using Int = mpz_class;
using Rat = mpq_class;

// Hard internal failure: an invariant that can only break through an
// implementation bug (e.g. a convolution that should solve over the
// integers came out fractional).
struct integrity_error : std::logic_error {
  using std::logic_error::logic_error;
};

// An operation exceeded its configured work budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string dec(const Int& v) { return v.get_str(10); }

inline std::string dec(const Rat& v) { return v.get_str(10); }

}  // namespace walklab
