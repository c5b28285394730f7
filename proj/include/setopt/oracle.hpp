#pragma once

#include "setopt/setfun.hpp"

namespace setopt {

// Weak efficiency by pairwise cone dominance: x0 is kept iff no x in X has
// psi(x0) - psi(x) in int C.  Off-domain points never qualify.
std::vector<Point> weak_efficient_bruteforce(const PLComplex& psi, const ConeSpec& cone,
                                             const std::vector<Point>& X);

// Definition-level membership check of the inf-residual: for each probe z,
// compares "B + {z} subset of A" with membership in residual(a,b).
struct ResidualCheck {
  int probes = 0;
  int disagreements = 0;
  TriState consistent() const { return disagreements == 0 ? TriState::Holds : TriState::Fails; }
};
ResidualCheck residual_bruteforce(const GSet& a, const GSet& b, const std::vector<Point>& probes);

// Independent scalar Dini reference on closed-form segment functions,
// evaluated on a grid density times denser than the main path.  PL data is
// resolved by dense constant-quotient evidence; kseq data by exact
// rational-function reconstruction from sampled quotients (Cauchy
// interpolation), sharing no code with the primary limit computation.
DiniScalarResult derivative_oracle(const ScalarSegmentFn& f, int density = 10);

}  // namespace setopt
