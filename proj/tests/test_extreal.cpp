#include "doctest.h"
#include "setopt/extreal.hpp"

#include <vector>

using namespace setopt;

namespace {
const ExtReal kPos = ExtReal::pos_inf();
const ExtReal kNeg = ExtReal::neg_inf();

std::vector<ExtReal> grid() {
  return {kNeg, ExtReal(Rat(-2)), ExtReal(Rat(0)), ExtReal(rat_from_string("3/2")), kPos};
}
}  // namespace

TEST_CASE("rational parsing") {
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-6/4") == Rat(-3, 2));
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("+2/6") == Rat(1, 3));
  CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), std::invalid_argument);
  CHECK(rat_to_string(Rat(-3, 2)) == "-3/2");
}

TEST_CASE("inf_add basic values") {
  CHECK(inf_add(ExtReal(2), ExtReal(3)) == ExtReal(5));
  CHECK(inf_add(kPos, kNeg) == kPos);
  CHECK(inf_add(kNeg, ExtReal(7)) == kNeg);
  CHECK(inf_add(kNeg, kNeg) == kNeg);
}

TEST_CASE("inf_residual basic values") {
  CHECK(inf_residual(ExtReal(3), ExtReal(1)) == ExtReal(2));
  CHECK(inf_residual(kPos, kPos) == kNeg);
  CHECK(inf_residual(kPos, ExtReal(5)) == kPos);
  CHECK(inf_residual(kNeg, kNeg) == kNeg);
  CHECK(inf_residual(ExtReal(0), kNeg) == kPos);
  CHECK(inf_residual(kNeg, ExtReal(4)) == kNeg);
}

TEST_CASE("scale") {
  CHECK(scale(Rat(1, 2), ExtReal(4)) == ExtReal(2));
  CHECK(scale(Rat(3), kPos) == kPos);
  CHECK(scale(Rat(2), kNeg) == kNeg);
  CHECK_THROWS_AS(scale(Rat(0), ExtReal(1)), std::invalid_argument);
  CHECK_THROWS_AS(scale(Rat(-1), ExtReal(1)), std::invalid_argument);
}

// r <= s +. t  <=>  (r -. s) <= t, exhaustively over the 5-point grid.
TEST_CASE("adjunction on grid") {
  for (const auto& r : grid())
    for (const auto& s : grid())
      for (const auto& t : grid()) {
        bool lhs = r <= inf_add(s, t);
        bool rhs = inf_residual(r, s) <= t;
        CHECK(lhs == rhs);
      }
}

TEST_CASE("monotonicity on grid") {
  for (const auto& r : grid())
    for (const auto& rp : grid()) {
      if (!(r <= rp)) continue;
      for (const auto& s : grid()) {
        CHECK(inf_add(r, s) <= inf_add(rp, s));
        CHECK(inf_residual(r, s) <= inf_residual(rp, s));
      }
    }
}

TEST_CASE("pos_inf absorbs inf_add") {
  for (const auto& s : grid()) {
    CHECK(inf_add(kPos, s) == kPos);
    CHECK(inf_add(s, kPos) == kPos);
  }
}

TEST_CASE("string round trip") {
  CHECK(ExtReal::from_string("+inf").is_pos_inf());
  CHECK(ExtReal::from_string("-inf").is_neg_inf());
  CHECK(ExtReal::from_string("-5/3") == ExtReal(Rat(-5, 3)));
  CHECK(ExtReal(Rat(-5, 3)).to_string() == "-5/3");
  CHECK(kPos.to_string() == "+inf");
}
