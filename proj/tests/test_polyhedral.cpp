#include "doctest.h"
#include "setopt/polyhedral.hpp"

#include <random>

using namespace setopt;

namespace {

Vec v2(long a, long b) { return {Rat(a), Rat(b)}; }
Vec v2q(const char* a, const char* b) { return {rat_from_string(a), rat_from_string(b)}; }

// Membership-level equality oracle: checks denotation via point/constraint
// tests only, independent of the canonical forms.
bool same_denotation(const VRep& a, const VRep& b) {
  return subset(a, v_to_h(b)) && subset(b, v_to_h(a));
}

}  // namespace

TEST_CASE("h_to_v: quadrant") {
  HRep h{2, {Halfspace{v2(1, 0), Rat(0)}, Halfspace{v2(0, -1), Rat(0)}}};
  // {x <= 0, y >= 0}
  VRep v = h_to_v(h);
  REQUIRE(v.vertices.size() == 1);
  CHECK(v.vertices[0] == v2(0, 0));
  REQUIRE(v.rays.size() == 2);
  CHECK(v.rays[0] == v2(-1, 0));
  CHECK(v.rays[1] == v2(0, 1));
}

TEST_CASE("v_to_h: segment") {
  VRep v{2, {v2(0, 0), v2(1, 0)}, {}};
  HRep h = v_to_h(v);
  // Segment [(0,0),(1,0)]: z2 = 0 pair plus 0 <= z1 <= 1.
  CHECK(h.constraints.size() == 4);
  VRep back = h_to_v(h);
  CHECK(same_denotation(v, back));
  CHECK(contains_point(h, v2q("1/2", "0")));
  CHECK(!contains_point(h, v2q("1/2", "1/3")));
  CHECK(!contains_point(h, v2(2, 0)));
}

TEST_CASE("empty and full round trip") {
  HRep full = HRep::full(2);
  VRep vfull = h_to_v(full);
  CHECK(!vfull.is_empty());
  CHECK(v_to_h(vfull).constraints.empty());

  VRep vempty = VRep::empty(2);
  HRep hempty = v_to_h(vempty);
  CHECK(hempty.is_empty_canonical());
  CHECK(h_to_v(hempty).is_empty());
}

TEST_CASE("disjoint halfplanes intersect to empty") {
  HRep a{2, {Halfspace{v2(1, 0), Rat(-1)}}};   // x <= -1
  HRep b{2, {Halfspace{v2(-1, 0), Rat(-1)}}};  // x >= 1
  HRep c = intersect(a, b);
  CHECK(c.is_empty_canonical());
}

TEST_CASE("intersect with full space is identity") {
  HRep a{2, {Halfspace{v2(1, 1), Rat(2)}, Halfspace{v2(-1, 0), Rat(0)}}};
  HRep c = intersect(a, HRep::full(2));
  CHECK(same_denotation(h_to_v(a), h_to_v(c)));
}

TEST_CASE("absolute value cone from two halfplanes") {
  // {y >= -x} ∩ {y >= x} = {y >= |x|}
  HRep a{2, {Halfspace{v2(-1, -1), Rat(0)}}};
  HRep b{2, {Halfspace{v2(1, -1), Rat(0)}}};
  HRep c = intersect(a, b);
  CHECK(c.constraints.size() == 2);
  VRep v = h_to_v(c);
  REQUIRE(v.vertices.size() == 1);
  CHECK(v.vertices[0] == v2(0, 0));
  CHECK(v.rays.size() == 2);
}

TEST_CASE("minkowski: translate of a cone") {
  VRep a{2, {v2(0, 0)}, {v2(1, 0), v2(0, 1)}};
  VRep b{2, {v2(1, 1)}, {v2(1, 0), v2(0, 1)}};
  VRep s = minkowski_sum(a, b);
  REQUIRE(s.vertices.size() == 1);
  CHECK(s.vertices[0] == v2(1, 1));
  CHECK(s.rays.size() == 2);
}

TEST_CASE("minkowski: empty dominates") {
  VRep a = VRep::empty(2);
  VRep b{2, {v2(1, 1)}, {}};
  CHECK(minkowski_sum(a, b).is_empty());
  CHECK(minkowski_sum(b, a).is_empty());
}

TEST_CASE("minkowski: unit square from two segments") {
  VRep a{2, {v2(0, 0), v2(1, 0)}, {}};
  VRep b{2, {v2(0, 0), v2(0, 1)}, {}};
  VRep s = minkowski_sum(a, b);
  REQUIRE(s.vertices.size() == 4);
  CHECK(same_denotation(s, VRep{2, {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)}, {}}));
}

TEST_CASE("support function") {
  // P = {y >= |x|}: sigma((0,-1)|P) = 0 attained at the origin.
  VRep p{2, {v2(0, 0)}, {v2(-1, 1), v2(1, 1)}};
  CHECK(support(v2(0, -1), p) == ExtReal(0));
  CHECK(support(v2(0, -1), VRep::empty(2)) == ExtReal::neg_inf());
  VRep quad{2, {v2(0, 0)}, {v2(1, 0), v2(0, 1)}};
  CHECK(support(v2(1, 0), quad) == ExtReal::pos_inf());
}

TEST_CASE("subset and strict_subset conventions") {
  VRep a{2, {v2(1, 1)}, {v2(1, 0), v2(0, 1)}};
  VRep b{2, {v2(0, 0)}, {v2(1, 0), v2(0, 1)}};
  HRep bh = v_to_h(b);
  CHECK(subset(a, bh));
  CHECK(strict_subset(a, bh));
  CHECK(subset(b, bh));
  CHECK(!strict_subset(b, bh));  // vertex on its own boundary

  // Empty is strictly inside anything; nothing nonempty fits inside int(empty).
  CHECK(strict_subset(VRep::empty(2), bh));
  CHECK(strict_subset(VRep::empty(2), HRep::empty(2)));
  CHECK(!strict_subset(b, HRep::empty(2)));
  CHECK(strict_subset(b, HRep::full(2)));
}

TEST_CASE("lineality: halfplane has generator form") {
  HRep h{2, {Halfspace{v2(0, -1), Rat(0)}}};  // y >= 0
  VRep v = h_to_v(h);
  REQUIRE(!v.is_empty());
  CHECK(same_denotation(v, h_to_v(v_to_h(v))));
  CHECK(support(v2(1, 0), v) == ExtReal::pos_inf());
  CHECK(support(v2(0, -1), v) == ExtReal(0));
}

TEST_CASE("random round trips preserve denotation") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> coord(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> nverts(1, 4);
  std::uniform_int_distribution<int> nrays(0, 2);
  for (int dim = 2; dim <= 3; ++dim) {
    for (int iter = 0; iter < 40; ++iter) {
      VRep v{dim, {}, {}};
      int nv = nverts(rng);
      for (int i = 0; i < nv; ++i) {
        Vec p(dim);
        for (int d = 0; d < dim; ++d) p[d] = frac(coord(rng), den(rng));
        v.vertices.push_back(p);
      }
      int nr = nrays(rng);
      for (int i = 0; i < nr; ++i) {
        Vec r(dim);
        for (int d = 0; d < dim; ++d) r[d] = Rat(coord(rng));
        if (!is_zero(r)) v.rays.push_back(r);
      }
      VRep canon = canonicalize(v);
      CHECK(same_denotation(v, canon));
      HRep h = v_to_h(v);
      CHECK(same_denotation(h_to_v(h), v));
      // Canonical forms are fixed points.
      VRep canon2 = canonicalize(canon);
      CHECK(canon.vertices == canon2.vertices);
      CHECK(canon.rays == canon2.rays);
    }
  }
}

TEST_CASE("subset both ways means equal denotation") {
  VRep a{2, {v2(0, 0), v2(2, 0), v2(0, 2)}, {}};
  VRep b{2, {v2(0, 0), v2(2, 0), v2(0, 2), v2(1, 1)}, {}};  // redundant generator
  CHECK(subset(a, v_to_h(b)));
  CHECK(subset(b, v_to_h(a)));
  VRep ca = canonicalize(a), cb = canonicalize(b);
  CHECK(ca.vertices == cb.vertices);
}
