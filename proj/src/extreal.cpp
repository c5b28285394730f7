#include "setopt/extreal.hpp"

#include <cctype>
#include <stdexcept>

namespace setopt {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool seen_digit = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
    } else if (s[i] == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational literal: " + s);
  Rat r;
  if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

const Rat& ExtReal::finite_value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("finite_value() on infinite ExtReal");
  return value_;
}

bool ExtReal::operator==(const ExtReal& o) const {
  if (kind_ != o.kind_) return false;
  return kind_ != Kind::Finite || value_ == o.value_;
}

bool ExtReal::operator<(const ExtReal& o) const {
  if (kind_ == Kind::NegInf) return o.kind_ != Kind::NegInf;
  if (kind_ == Kind::PosInf) return false;
  if (o.kind_ == Kind::PosInf) return true;
  if (o.kind_ == Kind::NegInf) return false;
  return value_ < o.value_;
}

std::string ExtReal::to_string() const {
  if (kind_ == Kind::PosInf) return "+inf";
  if (kind_ == Kind::NegInf) return "-inf";
  return rat_to_string(value_);
}

ExtReal ExtReal::from_string(const std::string& s) {
  if (s == "+inf" || s == "inf") return pos_inf();
  if (s == "-inf") return neg_inf();
  return ExtReal(rat_from_string(s));
}

ExtReal inf_add(const ExtReal& r, const ExtReal& s) {
  if (r.is_pos_inf() || s.is_pos_inf()) return ExtReal::pos_inf();
  if (r.is_neg_inf() || s.is_neg_inf()) return ExtReal::neg_inf();
  return ExtReal(Rat(r.finite_value() + s.finite_value()));
}

ExtReal inf_residual(const ExtReal& r, const ExtReal& s) {
  if (s.is_pos_inf()) return ExtReal::neg_inf();
  if (s.is_neg_inf()) return r.is_neg_inf() ? ExtReal::neg_inf() : ExtReal::pos_inf();
  if (r.is_pos_inf()) return ExtReal::pos_inf();
  if (r.is_neg_inf()) return ExtReal::neg_inf();
  return ExtReal(Rat(r.finite_value() - s.finite_value()));
}

ExtReal scale(const Rat& t, const ExtReal& r) {
  if (t <= 0) throw std::invalid_argument("scale requires t > 0");
  if (!r.is_finite()) return r;
  return ExtReal(Rat(t * r.finite_value()));
}

ExtReal min(const ExtReal& a, const ExtReal& b) { return a < b ? a : b; }
ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

}  // namespace setopt
