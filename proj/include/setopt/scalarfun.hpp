#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "setopt/extreal.hpp"
#include "setopt/linalg.hpp"

namespace setopt {

enum class TriState { Holds, Fails, Unknown };
const char* to_string(TriState t);

// Polynomials in one variable, constant coefficient first.
using Poly = std::vector<Rat>;
Rat poly_eval(const Poly& p, const Rat& x);
int poly_degree(const Poly& p);  // -1 for the zero polynomial

// Rational function num/den, used for closed-form index sequences.
struct RatFun {
  Poly num, den;
};
Rat ratfun_eval(const RatFun& f, const Rat& x);
// Limit for k -> +inf, by degree and leading-coefficient comparison.
ExtReal ratfun_limit_at_infinity(const RatFun& f);

// Extended scalar function on a segment, finite and piecewise linear on
// finitely many closed intervals (chunks), +inf outside.  A chunk with one
// point is an isolated domain point.
struct PLFun {
  std::vector<std::vector<std::pair<Rat, Rat>>> chunks;  // t strictly increasing

  ExtReal eval(const Rat& t) const;
  bool in_domain(const Rat& t) const { return eval(t).is_finite(); }
  static PLFun single_piece(std::vector<std::pair<Rat, Rat>> pts) { return PLFun{{std::move(pts)}}; }
};

// Closed-form profile along a declared sequence t_k -> 0: t_k and phi(t_k)
// are rational functions of the index k >= 1, phi(0) is given separately.
// This covers the paper's non-polyhedral scalar examples exactly (e.g. the
// circle profile sampled along a Pythagorean sequence).
struct KSeqFun {
  RatFun t_of_k;
  RatFun phi_of_k;
  ExtReal phi_at_zero;
  long display_n = 64;  // prefix used for tabulations and finite audits
};

// Explicit sample list along a decreasing t-sequence; derivative results are
// estimates with a stabilization report.
struct SampleFun {
  std::vector<std::pair<Rat, ExtReal>> samples;  // t strictly decreasing
  ExtReal value_at_zero;
};

using ScalarSegmentFn = std::variant<PLFun, KSeqFun, SampleFun>;

struct DiniScalarResult {
  ExtReal upper;
  ExtReal lower;
  bool exact = false;
  int stable_tail = 0;  // for sampled mode: length of the agreeing tail window
};

// Upper/lower Dini derivative of the segment function at t0 in direction
// dir (+1 or -1).  KSeq and Sample functions support t0 = 0, dir = +1 (their
// sequences run to 0 from the right).  Conventions follow the scalar case:
// phi(t0) = +inf gives -inf; an immediate domain exit gives +inf.
DiniScalarResult scalar_dini(const ScalarSegmentFn& f, const Rat& t0, int dir);

ExtReal scalar_eval(const ScalarSegmentFn& f, const Rat& t);

// Lower semicontinuity at t0 along the function's own structure: exact for
// PL (one-sided limits) and KSeq (closed-form limit), Unknown for samples.
TriState check_lsc_at(const ScalarSegmentFn& f, const Rat& t0);

// Convexity of a PL segment function on its domain: exact slope monotonicity
// check; a non-PL profile cannot be certified and reports Unknown.
TriState check_convex(const ScalarSegmentFn& f);

}  // namespace setopt
