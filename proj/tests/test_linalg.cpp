#include "doctest.h"
#include "setopt/linalg.hpp"

using namespace setopt;

TEST_CASE("rref and rank") {
  Matrix m = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(rank(m) == 1);
  Matrix id = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(rank(id) == 2);
}

TEST_CASE("nullspace") {
  // x + y + z = 0 has a 2-dimensional nullspace.
  Matrix m = {{Rat(1), Rat(1), Rat(1)}};
  auto ns = nullspace(m, 3);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(dot(m[0], v) == 0);

  Matrix full = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(nullspace(full, 2).empty());
}

TEST_CASE("primitive") {
  Vec v = {Rat(1, 2), Rat(-3, 4)};
  CHECK(primitive(v) == Vec{Rat(2), Rat(-3)});
  Vec w = {Rat(4), Rat(-6)};
  CHECK(primitive(w) == Vec{Rat(2), Rat(-3)});
  Vec z = {Rat(0), Rat(0)};
  CHECK(primitive(z) == z);
}

TEST_CASE("lex order") {
  CHECK(lex_less({Rat(0), Rat(1)}, {Rat(1), Rat(0)}));
  CHECK(!lex_less({Rat(1), Rat(0)}, {Rat(0), Rat(1)}));
}
