#pragma once

#include <string>
#include <vector>

#include "setopt/extreal.hpp"
#include "setopt/linalg.hpp"

namespace setopt {

// Ambient points z in Z and dual vectors z* in Z*.
using Point = Vec;
using DualVector = Vec;

struct Halfspace {
  DualVector normal;  // a
  Rat offset;         // c, meaning {z | <a,z> <= c}
};

// Intersection of finitely many halfspaces.  An empty constraint list is the
// full space.  The empty set has the canonical single constraint 0.z <= -1.
struct HRep {
  int dim = 0;
  std::vector<Halfspace> constraints;

  static HRep full(int dim) { return HRep{dim, {}}; }
  static HRep empty(int dim);
  bool is_empty_canonical() const;
};

// conv(vertices) + cone(rays).  No vertices means the empty set (rays are
// then ignored).  Lines are carried as +-ray pairs.
struct VRep {
  int dim = 0;
  std::vector<Point> vertices;
  std::vector<Point> rays;

  bool is_empty() const { return vertices.empty(); }
  static VRep empty(int dim) { return VRep{dim, {}, {}}; }
  static VRep full(int dim);
  static VRep point(const Point& p) { return VRep{static_cast<int>(p.size()), {p}, {}}; }
};

// Generators of the cone {x in R^dim | <r,x> <= 0 for all rows r}: a basis of
// its lineality space plus the extreme rays of its pointed part (the
// intersection with the orthogonal complement of the lineality space).
struct ConeGens {
  std::vector<Vec> lines;
  std::vector<Vec> rays;
};
ConeGens extreme_rays(const std::vector<Vec>& rows, int dim);

// Representation conversion via cone homogenization.  Outputs are canonical:
// irredundant, primitive-integer normals/rays, lexicographically sorted.
VRep h_to_v(const HRep& h);
HRep v_to_h(const VRep& v);

// Canonical forms (round trips through the other representation).
VRep canonicalize(const VRep& v);
HRep canonicalize(const HRep& h);

VRep minkowski_sum(const VRep& a, const VRep& b);
HRep intersect(const HRep& a, const HRep& b);

// sigma(z*|P) = sup{<z*,z> | z in P}: -inf on the empty set, +inf when some
// ray has positive inner product, otherwise the maximum over the vertices.
ExtReal support(const DualVector& zstar, const VRep& p);

bool contains_point(const HRep& p, const Point& z);

// subset: every vertex of a satisfies every constraint of b and every ray r
// of a has <normal,r> <= 0.  strict_subset implements a ⊆ int b and needs b
// irredundant: vertex inequalities become strict.
bool subset(const VRep& a, const HRep& b);
bool strict_subset(const VRep& a, const HRep& b);

bool same_set(const VRep& a, const VRep& b);

std::string to_string(const HRep& h);
std::string to_string(const VRep& v);

}  // namespace setopt
