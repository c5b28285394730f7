#pragma once

#include <string>

#include "setopt/rational.hpp"

namespace setopt {

// Extended real scalar with inf-addition and inf-residuation.  This is the
// scalar image lattice: +inf plays the role of the empty set, -inf the role
// of the whole line, and a finite r stands for the upper cut [r, +inf).
//
// Operation tables (rows r, columns s):
//
//   inf_add            -inf   finite   +inf      inf_residual       -inf   finite   +inf
//   -inf               -inf   -inf     +inf      -inf               -inf   -inf     -inf
//   finite r           -inf   r+s      +inf      finite r           +inf   r-s      -inf
//   +inf               +inf   +inf     +inf      +inf               +inf   +inf     -inf
class ExtReal {
 public:
  ExtReal() : kind_(Kind::Finite), value_(0) {}
  ExtReal(const Rat& v) : kind_(Kind::Finite), value_(v) {}
  ExtReal(long v) : kind_(Kind::Finite), value_(v) {}

  static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  // Only valid when finite.
  const Rat& finite_value() const;

  bool operator==(const ExtReal& o) const;
  bool operator!=(const ExtReal& o) const { return !(*this == o); }
  bool operator<(const ExtReal& o) const;
  bool operator<=(const ExtReal& o) const { return !(o < *this); }
  bool operator>(const ExtReal& o) const { return o < *this; }
  bool operator>=(const ExtReal& o) const { return !(*this < o); }

  std::string to_string() const;
  static ExtReal from_string(const std::string& s);

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit ExtReal(Kind k) : kind_(k), value_(0) {}

  Kind kind_;
  Rat value_;
};

// r +. s = inf{a+b | r <= a, s <= b}. +inf absorbs (inf over the empty set).
ExtReal inf_add(const ExtReal& r, const ExtReal& s);

// r -. s = inf{t | r <= s +. t}, the residual adjoint to inf_add:
// r <= s +. t  <=>  (r -. s) <= t.
ExtReal inf_residual(const ExtReal& r, const ExtReal& s);

// t * r for t > 0; throws on t <= 0.
ExtReal scale(const Rat& t, const ExtReal& r);

ExtReal min(const ExtReal& a, const ExtReal& b);
ExtReal max(const ExtReal& a, const ExtReal& b);

}  // namespace setopt
