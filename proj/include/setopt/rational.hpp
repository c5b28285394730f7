#pragma once

#include <gmpxx.h>
#include <string>

namespace setopt {

// All arithmetic in this library is exact. Finite scalars are GMP rationals,
// kept canonical (gcd(p,q) = 1, q > 0) by construction.
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize and GMP comparisons assume
// canonical form; all runtime num/den pairs go through this.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q" with optional sign. Rejects anything else, in
// particular decimal notation like "1.5".
Rat rat_from_string(const std::string& s);

// Canonical form "p" or "p/q" with q > 1.
std::string rat_to_string(const Rat& r);

}  // namespace setopt
