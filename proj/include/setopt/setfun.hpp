#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "setopt/conlinear.hpp"
#include "setopt/scalarfun.hpp"

namespace setopt {

// Piecewise-linear vector map psi on a simplicial complex in X = R^xdim with
// values in Z = R^zdim.  The domain S is the union of the declared simplices
// plus any isolated sites; evaluation elsewhere is "off domain".
struct PLComplex {
  int xdim = 0, zdim = 0;
  std::vector<Point> sites;
  std::vector<Point> values;
  std::vector<std::vector<int>> simplices;  // index lists, affinely independent
  std::map<Point, std::vector<int>> site_simplices;           // incidence, built on validate()
  std::vector<std::pair<Point, Point>> simplex_bounds;  // per-simplex bounding boxes

  std::optional<Point> eval(const Point& x) const;

  // Largest initial linear piece along x + t*u, t > 0: psi(x+tu) = psi(x) +
  // t*slope on [0, t_end].  Empty when the segment leaves S immediately.
  struct FirstPiece {
    Rat t_end;
    Point slope;
  };
  std::optional<FirstPiece> first_piece(const Point& x, const Point& u) const;

  // Exact restriction to the segment x0 + t(x1-x0), t in [0,1], as a 1-D
  // complex over t.
  PLComplex restrict_segment(const Point& x0, const Point& x1) const;

  void validate() const;
};

// f(t) = conv{base_k + t*vel_k} + cone(extra_rays) (+C) for t in [lo,hi],
// Empty outside; the genuinely set-valued example family.
struct AffineTracks {
  int zdim = 0;
  Rat lo, hi;
  std::vector<std::pair<Point, Point>> tracks;  // (base, velocity)
  std::vector<Point> extra_rays;
};

// Black-box scalarization data: for each declared z* a segment profile
// phi_{f,z*}.  Set-level values are unavailable; operations on this backend
// answer through the scalar family or report Unknown.
struct ScalarProfiles {
  int zdim = 0;
  struct Entry {
    DualVector zstar;
    ScalarSegmentFn fn;
  };
  std::vector<Entry> entries;
  // Reference value for the assembly-vs-primal gap audit, when the source
  // derivation pins the set-level derivative.
  std::optional<VRep> declared_primal_derivative;
};

class SetFun {
 public:
  enum class Backend { Extension, Tracks, Profiles };

  static SetFun extension(PLComplex psi, ConePtr cone, bool declared_convex);
  static SetFun affine_tracks(AffineTracks tr, ConePtr cone, bool declared_convex);
  static SetFun profile_family(ScalarProfiles pr, ConePtr cone_or_null);

  Backend backend() const { return backend_; }
  const ConePtr& cone() const { return cone_; }
  int xdim() const { return xdim_; }
  bool declared_convex() const { return declared_convex_; }
  const PLComplex& pl() const { return *pl_; }
  const AffineTracks& tracks() const { return *tracks_; }
  const ScalarProfiles& profiles() const { return *profiles_; }

  // Set value at x; Empty when x is off the domain.  Unavailable (nullopt)
  // for profile backends.
  std::optional<GSet> eval(const Point& x) const;
  bool in_domain(const Point& x) const;

  // phi_{f,z*}(x); nullopt when z* is not on a profile backend's grid.
  std::optional<ExtReal> scalarize_at(const Point& x, const DualVector& zstar) const;

  // Dini derivative of t |-> phi_{f,z*}(x0 + t*u) at t0 from direction dir.
  DiniScalarResult scalar_segment_dini(const Point& x0, const Point& u, const DualVector& zstar,
                                       const Rat& t0, int dir) const;

  // Restriction to the segment [x0, x1] as a set-valued function of t.
  SetFun restrict(const Point& x0, const Point& x1) const;

 private:
  SetFun() = default;
  Backend backend_ = Backend::Extension;
  ConePtr cone_;
  int xdim_ = 0;
  bool declared_convex_ = false;
  std::shared_ptr<const PLComplex> pl_;
  std::shared_ptr<const AffineTracks> tracks_;
  std::shared_ptr<const ScalarProfiles> profiles_;
};

struct ConvexitySample {
  Point x, y;
  Rat lambda;
};
struct ConvexityReport {
  std::vector<int> set_violations;     // indices of violated samples
  std::vector<int> scalar_violations;  // indices where some scalarization fails midpoint convexity
  int checked = 0;
  bool exact = true;  // false when the backend cannot evaluate a sample
};
ConvexityReport check_convexity_sampled(const SetFun& f, const std::vector<ConvexitySample>& samples);

}  // namespace setopt
