#include "doctest.h"
#include "setopt/oracle.hpp"

#include <random>

using namespace setopt;

namespace {

Vec v2(long a, long b) { return {Rat(a), Rat(b)}; }

ConePtr pareto2() { return make_cone(2, {v2(-1, 0), v2(0, -1)}, Point{Rat(1), Rat(1)}); }

PLComplex identity_grid() {
  PLComplex c;
  c.xdim = c.zdim = 2;
  auto idx = [](int i, int j) { return (i + 2) * 5 + (j + 2); };
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      c.sites.push_back(v2(i, j));
      c.values.push_back(v2(i, j));
    }
  for (int i = -2; i < 2; ++i)
    for (int j = -2; j < 2; ++j) {
      c.simplices.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)});
      c.simplices.push_back({idx(i, j), idx(i, j + 1), idx(i + 1, j + 1)});
    }
  return c;
}

}  // namespace

TEST_CASE("weak efficiency oracle on the identity grid") {
  auto c = pareto2();
  PLComplex psi = identity_grid();
  std::vector<Point> X;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) X.push_back(v2(i, j));
  auto eff = weak_efficient_bruteforce(psi, *c, X);
  CHECK(eff.size() == 9);  // 5+5-1 boundary points on the 5x5 grid
  for (const auto& p : eff) CHECK((p[0] == -2 || p[1] == -2));
  // Single-point X keeps its point.
  auto one = weak_efficient_bruteforce(psi, *c, {v2(0, 0)});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == v2(0, 0));
}

TEST_CASE("halfplane cone reduces weak efficiency to a scalar argmin") {
  // C = {z | z1 + z2 >= 0}: one dual normal; wEff = argmin of psi1+psi2 up
  // to ties.
  auto c = make_cone(2, {{Rat(-1, 2), Rat(-1, 2)}}, Point{Rat(1), Rat(1)});
  PLComplex psi = identity_grid();
  std::vector<Point> X;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) X.push_back(v2(i, j));
  auto eff = weak_efficient_bruteforce(psi, *c, X);
  // min of x1+x2 on the grid is -4, attained only at (-2,-2); ties at the
  // minimum would all be kept.
  REQUIRE(eff.size() == 1);
  CHECK(eff[0] == v2(-2, -2));
}

TEST_CASE("residual bruteforce agreement") {
  auto c = pareto2();
  std::mt19937_64 rng(991);
  std::uniform_int_distribution<int> coord(-4, 4), den(1, 3), nv(1, 3);
  auto rnd_gset = [&]() {
    VRep v{2, {}, {}};
    int n = nv(rng);
    for (int i = 0; i < n; ++i) v.vertices.push_back({frac(coord(rng), den(rng)), frac(coord(rng), den(rng))});
    return GSet::from_vrep(v, c);
  };
  for (int iter = 0; iter < 30; ++iter) {
    GSet a = rnd_gset(), b = rnd_gset();
    std::vector<Point> probes;
    for (int i = 0; i < 25; ++i) probes.push_back({frac(coord(rng), den(rng)), frac(coord(rng), den(rng))});
    auto rep = residual_bruteforce(a, b, probes);
    CHECK(rep.consistent() == TriState::Holds);
  }
  // Translated-cone pair from the exact-difference remark.
  GSet A = GSet::translated_cone(v2(2, -1), c);
  GSet B = GSet::from_vrep(VRep{2, {v2(0, 3), v2(3, 0)}, {}}, c);
  std::vector<Point> probes;
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) probes.push_back(v2(i, j));
  CHECK(residual_bruteforce(B, A, probes).consistent() == TriState::Holds);
}

TEST_CASE("derivative oracle on closed forms") {
  // |t| at 0.
  PLFun absf = PLFun::single_piece({{Rat(-1), Rat(1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
  auto d = derivative_oracle(ScalarSegmentFn{absf});
  CHECK(d.exact);
  CHECK(d.upper == ExtReal(1));

  // Circle profile: exact zero.
  KSeqFun circle;
  circle.t_of_k = {{Rat(0), Rat(2)}, {Rat(1), Rat(0), Rat(1)}};
  circle.phi_of_k = {{Rat(1), Rat(0), Rat(-1)}, {Rat(1), Rat(0), Rat(1)}};
  circle.phi_at_zero = ExtReal(Rat(-1));
  auto dc = derivative_oracle(ScalarSegmentFn{circle});
  CHECK(dc.exact);
  CHECK(dc.upper == ExtReal(0));
  CHECK(dc.lower == ExtReal(0));

  // Oscillation scalarization at z* = (0,-1,0): phi identically 0.
  KSeqFun zero;
  zero.t_of_k = {{Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(1)}};  // 1/k... t = k/k^2
  zero.phi_of_k = {{Rat(0)}, {Rat(1)}};
  zero.phi_at_zero = ExtReal(Rat(0));
  auto dz = derivative_oracle(ScalarSegmentFn{zero});
  CHECK(dz.upper == ExtReal(0));

  // Agreement with the primary path on the same closed forms.
  CHECK(scalar_dini(ScalarSegmentFn{absf}, Rat(0), +1).upper == d.upper);
  CHECK(scalar_dini(ScalarSegmentFn{circle}, Rat(0), +1).upper == dc.upper);
  CHECK(scalar_dini(ScalarSegmentFn{zero}, Rat(0), +1).upper == dz.upper);

  // Sample-only data is rejected.
  SampleFun raw;
  raw.value_at_zero = ExtReal(Rat(0));
  raw.samples = {{Rat(1), ExtReal(1)}};
  CHECK_THROWS_AS(derivative_oracle(ScalarSegmentFn{raw}), std::invalid_argument);
}
