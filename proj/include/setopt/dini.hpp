#pragma once

#include "setopt/setfun.hpp"

namespace setopt {

// Differential quotient (1/t)(f(x+tu) -. f(x)); Full when f(x) is Empty.
GSet quotient(const SetFun& f, const Point& x, const Point& u, const Rat& t);

struct DiniSetResult {
  GSet upper;
  GSet lower;
  bool exact = false;
  enum class Via { PrimalQuotient, ScalarAssembly } via = Via::PrimalQuotient;
  int stable_tail = 0;

  TriState exists() const {
    if (!exact) return TriState::Unknown;
    return upper == lower ? TriState::Holds : TriState::Fails;
  }
};

// Exact Dini derivative for convex PL-extension and affine-track backends:
// the quotient is constant below the first data breakpoint along the
// segment, and its monotonicity in t is asserted on a sample ladder.
DiniSetResult set_dini_convex(const SetFun& f, const Point& x, const Point& u);

// limsup/liminf over the declared strictly decreasing t-sequence, computed
// from the finite truncation: recurrent quotient values and divergent
// vertex drifts are classified, everything else falls back to a plateau
// scan of the tail sups/infs.  Results carry exact = false.
DiniSetResult set_dini_sampled(const SetFun& f, const Point& x, const Point& u,
                               const std::vector<Rat>& ts);

// Intersection of halfspaces {z | v <= -<z*,z>} over the finitely many
// finite v (the finite-scalarization form: +inf entries are skipped, -inf
// entries contribute the whole space).
struct RawAssembly {
  HRep h;
  VRep v;
};
RawAssembly assemble_raw(int dim, const std::vector<std::pair<DualVector, ExtReal>>& derivs);
GSet assemble_from_scalar(const std::vector<std::pair<DualVector, ExtReal>>& derivs, ConePtr cone);

struct RegularityEntry {
  DualVector zstar;
  DiniScalarResult scalar;  // phi^updownarrow along the segment
  ExtReal sigma_upper;      // -sigma(z*|f^up)
  ExtReal sigma_lower;      // -sigma(z*|f^down)
  TriState sr_upper = TriState::Unknown;
  TriState sr_lower = TriState::Unknown;
};

struct RegularityReport {
  std::vector<RegularityEntry> entries;
  TriState wr_upper = TriState::Unknown;  // reassembly (without skipping +inf) == set derivative
  TriState wr_lower = TriState::Unknown;
  bool exact = true;
  std::vector<std::string> violations;  // breaches of phi^ud <= -sigma(z*|f^ud)
};

// Compares scalar Dini derivatives against supports of the given set
// derivative for every z* in M*; asserts the universal inequality and
// labels the (SR)/(WR) equality status.  When ts is given, the scalar
// derivatives are sampled along the same sequence that produced the set
// derivative; otherwise the backend's exact segment derivative is used.
RegularityReport regularity_audit(const SetFun& f, const Point& x, const Point& u,
                                  const DiniSetResult& deriv,
                                  const std::vector<Rat>* ts = nullptr);

}  // namespace setopt
