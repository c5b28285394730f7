#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "setopt/polyhedral.hpp"

namespace setopt {

// Polyhedral ordering cone C = ⋂_j {z | <m_j,z> <= 0} with nonempty interior,
// given through a finite dual base M*.  Normals are normalized against the
// interior point e so that <m_j,e> = -1, which places M* inside the compact
// base W* = {z* in C- | z*(e) = -1}.  M* may contain normals that are
// redundant for C itself; they act as additional scalarization certificates.
struct ConeSpec {
  int dim = 0;
  std::vector<DualVector> dual_base;  // m_j with <m_j,e> = -1
  Point interior_point;               // e, <m_j,e> < 0 for all j
  VRep unit_ball;                     // U0, closed convex balanced 0-neighborhood
  HRep c_hrep;                        // {<m_j,z> <= 0}
  VRep c_vrep;                        // generator form of C
  bool pointed = true;
  // Decreasing bounded nets converge in finite dimension, so the compactness
  // hypothesis of the Minty equivalence holds automatically.
  bool minty_compactness = true;

  bool same_cone(const ConeSpec& o) const;
};

using ConePtr = std::shared_ptr<const ConeSpec>;

// Validates the invariants and fills the caches.  When no interior point is
// given, tries e = -(m_1+...+m_J) and falls back to an exact feasibility
// search on {<m_j,z> <= -1}.  Throws std::invalid_argument when C = Z,
// int C = ∅, or a normal is zero.  Default unit ball: the cross-polytope.
ConePtr make_cone(int dim, std::vector<DualVector> normals,
                  std::optional<Point> interior_point = std::nullopt,
                  std::optional<VRep> unit_ball = std::nullopt);

// Element of G(Z,C): trichotomy of the empty set, the full space, and a
// nonempty proper polyhedron stored in both canonical representations.
// The normalization A = cl co (A + C) holds by construction.
class GSet {
 public:
  enum class Kind { Empty, Full, Poly };

  static GSet empty(ConePtr cone);
  static GSet full(ConePtr cone);
  static GSet from_vrep(const VRep& raw, ConePtr cone);  // normalize(raw ⊕ C)
  static GSet from_hrep(const HRep& raw, ConePtr cone);
  static GSet translated_cone(const Point& p, ConePtr cone);  // {p} + C

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::Empty; }
  bool is_full() const { return kind_ == Kind::Full; }
  bool is_poly() const { return kind_ == Kind::Poly; }
  const VRep& vrep() const;
  const HRep& hrep() const;
  const ConePtr& cone() const { return cone_; }

  bool operator==(const GSet& o) const;
  bool operator!=(const GSet& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  GSet(Kind k, ConePtr cone) : kind_(k), cone_(std::move(cone)) {}
  Kind kind_;
  ConePtr cone_;
  VRep vrep_;
  HRep hrep_;
};

// {p} + C when a is exactly a translated cone, in canonical form.
std::optional<Point> as_translated_cone(const GSet& a);

GSet oplus(const GSet& a, const GSet& b);
GSet scale(const Rat& t, const GSet& a);  // t >= 0; scale(0,.) = C

GSet inf_family(const std::vector<GSet>& as, ConePtr cone);
GSet sup_family(const std::vector<GSet>& as, ConePtr cone);

// A -. B = {z | B + {z} ⊆ A}, the inf-residual.
GSet residual(const GSet& a, const GSet& b);

// 0+A = {z | A + {z} ⊆ A}; Empty stays Empty.
GSet recession(const GSet& a);

// phi notation: scalarize(A, z*) = inf{-<z*,z> | z in A} = -sigma(z*|A).
ExtReal scalarize(const GSet& a, const DualVector& zstar);

// a ≼ b  <=>  b ⊆ a.
bool leq(const GSet& a, const GSet& b);

bool set_contains(const GSet& a, const Point& z);

// A ⊆ int B, with the conventions ∅ ⊆ int B for any B and A ⊆ int ∅ only
// for A = ∅.
bool subset_of_interior(const GSet& a, const GSet& b);

// Exact test for: there is some ε > 0 with a ⊕ εU0 ⊆ b.  For polyhedra this
// reduces to strictly negative constraint margins plus ray conditions.
bool exists_uniform_margin(const GSet& a, const GSet& b);

// The implication chain (a) A ⊄ int B => (b) scalar certificate =>
// (c) A ⊕ U ⊄ B for every U, evaluated exactly and validated on every call.
struct InclusionAudit {
  bool not_in_int = false;                  // (a)
  std::optional<DualVector> scalar_cert;    // (b) witness from M*, if any
  bool robust_not_subset = false;           // (c)
  bool chain_ok = true;
};
InclusionAudit inclusion_audit(const GSet& a, const GSet& b);

}  // namespace setopt
