#include "setopt/conlinear.hpp"

#include <algorithm>
#include <stdexcept>

namespace setopt {

bool ConeSpec::same_cone(const ConeSpec& o) const {
  if (this == &o) return true;
  if (dim != o.dim || dual_base.size() != o.dual_base.size()) return false;
  for (std::size_t i = 0; i < dual_base.size(); ++i)
    if (dual_base[i] != o.dual_base[i]) return false;
  return interior_point == o.interior_point;
}

ConePtr make_cone(int dim, std::vector<DualVector> normals, std::optional<Point> interior_point,
                  std::optional<VRep> unit_ball) {
  if (dim < 1) throw std::invalid_argument("cone: dimension must be positive");
  if (normals.empty()) throw std::invalid_argument("cone: M* must be nonempty (C != Z)");
  for (const auto& m : normals) {
    if (static_cast<int>(m.size()) != dim) throw std::invalid_argument("cone: normal dimension mismatch");
    if (is_zero(m)) throw std::invalid_argument("cone: zero dual normal");
  }

  Point e;
  if (interior_point) {
    e = *interior_point;
    if (static_cast<int>(e.size()) != dim) throw std::invalid_argument("cone: interior point dimension mismatch");
    for (const auto& m : normals)
      if (dot(m, e) >= 0) throw std::invalid_argument("cone: given point is not interior");
  } else {
    Point cand = zero_vec(dim);
    for (const auto& m : normals) cand = sub(cand, m);
    bool ok = !is_zero(cand);
    for (const auto& m : normals) ok = ok && dot(m, cand) < 0;
    if (ok) {
      e = cand;
    } else {
      // Exact feasibility search: any vertex of {<m_j,z> <= -1} is interior.
      HRep feas{dim, {}};
      for (const auto& m : normals) feas.constraints.push_back(Halfspace{m, Rat(-1)});
      VRep sol = h_to_v(feas);
      if (sol.is_empty()) throw std::invalid_argument("cone: interior is empty");
      e = sol.vertices.front();
    }
  }

  auto cone = std::make_shared<ConeSpec>();
  cone->dim = dim;
  cone->interior_point = e;
  for (auto& m : normals) {
    Rat s = dot(m, e);  // s < 0; rescale so <m,e> = -1
    cone->dual_base.push_back(scale_vec(-1 / s, m));
  }

  HRep ch{dim, {}};
  for (const auto& m : cone->dual_base) ch.constraints.push_back(Halfspace{m, Rat(0)});
  cone->c_hrep = canonicalize(ch);
  cone->c_vrep = h_to_v(cone->c_hrep);
  {
    Matrix rows;
    for (const auto& m : cone->dual_base) rows.push_back(m);
    cone->pointed = rank(rows) == dim;
  }

  if (unit_ball) {
    VRep ball = canonicalize(*unit_ball);
    if (ball.is_empty() || !ball.rays.empty())
      throw std::invalid_argument("cone: unit ball must be a polytope");
    HRep bh = v_to_h(ball);
    if (!strict_subset(VRep::point(zero_vec(dim)), bh))
      throw std::invalid_argument("cone: unit ball must have 0 in its interior");
    for (const auto& v : ball.vertices)
      if (!contains_point(bh, neg(v))) throw std::invalid_argument("cone: unit ball must be balanced");
    cone->unit_ball = ball;
  } else {
    VRep ball{dim, {}, {}};
    for (int i = 0; i < dim; ++i) {
      ball.vertices.push_back(unit_vec(dim, i));
      ball.vertices.push_back(neg(unit_vec(dim, i)));
    }
    cone->unit_ball = canonicalize(ball);
  }
  return cone;
}

namespace {

void require_same_cone(const GSet& a, const GSet& b, const char* op) {
  if (!a.cone()->same_cone(*b.cone())) throw std::invalid_argument(std::string(op) + ": cone mismatch");
}

}  // namespace

GSet GSet::empty(ConePtr cone) { return GSet(Kind::Empty, std::move(cone)); }

GSet GSet::full(ConePtr cone) {
  GSet g(Kind::Full, std::move(cone));
  g.vrep_ = VRep::full(g.cone_->dim);
  g.hrep_ = HRep::full(g.cone_->dim);
  return g;
}

GSet GSet::from_vrep(const VRep& raw, ConePtr cone) {
  if (raw.dim != cone->dim) throw std::invalid_argument("GSet: dimension mismatch");
  if (raw.is_empty()) return empty(std::move(cone));
  VRep widened = raw;
  widened.rays.insert(widened.rays.end(), cone->c_vrep.rays.begin(), cone->c_vrep.rays.end());
  HRep h = v_to_h(widened);
  if (h.constraints.empty()) return full(std::move(cone));
  GSet g(Kind::Poly, std::move(cone));
  g.hrep_ = h;
  g.vrep_ = h_to_v(h);
  return g;
}

GSet GSet::from_hrep(const HRep& raw, ConePtr cone) {
  if (raw.dim != cone->dim) throw std::invalid_argument("GSet: dimension mismatch");
  VRep v = h_to_v(raw);
  return from_vrep(v, std::move(cone));
}

GSet GSet::translated_cone(const Point& p, ConePtr cone) {
  if (static_cast<int>(p.size()) != cone->dim) throw std::invalid_argument("GSet: dimension mismatch");
  if (!cone->pointed) {
    VRep raw = VRep::point(p);
    return from_vrep(raw, std::move(cone));
  }
  // Pointed cone: {p} + C keeps C's canonical rays and facet normals, so
  // both representations can be written down directly.
  GSet g(Kind::Poly, cone);
  g.vrep_ = cone->c_vrep;
  g.vrep_.vertices = {p};
  g.hrep_ = cone->c_hrep;
  for (auto& c : g.hrep_.constraints) {
    Vec joint = c.normal;
    joint.push_back(dot(c.normal, p));
    joint = primitive(joint);
    c.normal.assign(joint.begin(), joint.end() - 1);
    c.offset = joint.back();
  }
  std::sort(g.hrep_.constraints.begin(), g.hrep_.constraints.end(),
            [](const Halfspace& x, const Halfspace& y) {
              Vec a = x.normal, b = y.normal;
              a.push_back(x.offset);
              b.push_back(y.offset);
              return lex_less(a, b);
            });
  return g;
}

std::optional<Point> as_translated_cone(const GSet& a) {
  if (!a.is_poly() || !a.cone()->pointed) return std::nullopt;
  const VRep& v = a.vrep();
  if (v.vertices.size() != 1 || v.rays != a.cone()->c_vrep.rays) return std::nullopt;
  return v.vertices.front();
}

const VRep& GSet::vrep() const {
  if (kind_ == Kind::Empty) throw std::logic_error("vrep() on Empty GSet");
  return vrep_;
}

const HRep& GSet::hrep() const {
  if (kind_ == Kind::Empty) throw std::logic_error("hrep() on Empty GSet");
  return hrep_;
}

bool GSet::operator==(const GSet& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ != Kind::Poly) return true;
  return vrep_.vertices == o.vrep_.vertices && vrep_.rays == o.vrep_.rays;
}

std::string GSet::to_string() const {
  if (kind_ == Kind::Empty) return "Empty";
  if (kind_ == Kind::Full) return "Full";
  return setopt::to_string(vrep_);
}

GSet oplus(const GSet& a, const GSet& b) {
  require_same_cone(a, b, "oplus");
  if (a.is_empty() || b.is_empty()) return GSet::empty(a.cone());
  if (a.is_full() || b.is_full()) return GSet::full(a.cone());
  return GSet::from_vrep(minkowski_sum(a.vrep(), b.vrep()), a.cone());
}

GSet scale(const Rat& t, const GSet& a) {
  if (t < 0) throw std::invalid_argument("scale: t must be >= 0");
  if (t == 0) return GSet::from_vrep(a.cone()->c_vrep, a.cone());  // 0*A = C, also for Empty/Full
  if (!a.is_poly()) return a;
  if (auto apex = as_translated_cone(a)) return GSet::translated_cone(scale_vec(t, *apex), a.cone());
  VRep v = a.vrep();
  for (auto& p : v.vertices) p = scale_vec(t, p);
  return GSet::from_vrep(v, a.cone());
}

GSet inf_family(const std::vector<GSet>& as, ConePtr cone) {
  VRep acc{cone->dim, {}, {}};
  for (const auto& a : as) {
    if (!a.cone()->same_cone(*cone)) throw std::invalid_argument("inf_family: cone mismatch");
    if (a.is_empty()) continue;
    if (a.is_full()) return GSet::full(cone);
    acc.vertices.insert(acc.vertices.end(), a.vrep().vertices.begin(), a.vrep().vertices.end());
    acc.rays.insert(acc.rays.end(), a.vrep().rays.begin(), a.vrep().rays.end());
  }
  return GSet::from_vrep(acc, cone);  // Empty when every member was Empty
}

GSet sup_family(const std::vector<GSet>& as, ConePtr cone) {
  HRep acc = HRep::full(cone->dim);
  for (const auto& a : as) {
    if (!a.cone()->same_cone(*cone)) throw std::invalid_argument("sup_family: cone mismatch");
    if (a.is_empty()) return GSet::empty(cone);
    if (a.is_full()) continue;
    acc.constraints.insert(acc.constraints.end(), a.hrep().constraints.begin(), a.hrep().constraints.end());
  }
  return GSet::from_hrep(acc, cone);
}

GSet residual(const GSet& a, const GSet& b) {
  require_same_cone(a, b, "residual");
  if (a.is_full()) return GSet::full(a.cone());
  if (b.is_empty()) return GSet::full(a.cone());
  if (a.is_empty()) return GSet::empty(a.cone());
  if (b.is_full()) return GSet::empty(a.cone());
  {
    auto pa = as_translated_cone(a);
    auto pb = as_translated_cone(b);
    if (pa && pb) return GSet::translated_cone(sub(*pa, *pb), a.cone());
  }
  HRep out{a.cone()->dim, {}};
  for (const auto& c : a.hrep().constraints) {
    ExtReal s = support(c.normal, b.vrep());
    if (s.is_pos_inf()) return GSet::empty(a.cone());  // offset would be -inf
    // s = -inf cannot occur: b is nonempty here.
    out.constraints.push_back(Halfspace{c.normal, Rat(c.offset - s.finite_value())});
  }
  return GSet::from_hrep(out, a.cone());
}

GSet recession(const GSet& a) {
  if (a.is_empty()) return a;
  if (a.is_full()) return a;
  VRep v{a.cone()->dim, {zero_vec(a.cone()->dim)}, a.vrep().rays};
  return GSet::from_vrep(v, a.cone());
}

ExtReal scalarize(const GSet& a, const DualVector& zstar) {
  if (a.is_empty()) return ExtReal::pos_inf();
  if (a.is_full()) return ExtReal::neg_inf();
  ExtReal s = support(zstar, a.vrep());
  if (s.is_pos_inf()) return ExtReal::neg_inf();
  if (s.is_neg_inf()) return ExtReal::pos_inf();
  return ExtReal(Rat(-s.finite_value()));
}

bool leq(const GSet& a, const GSet& b) {
  require_same_cone(a, b, "leq");
  if (b.is_empty()) return true;   // Empty is the top
  if (a.is_full()) return true;    // Full is the bottom
  if (a.is_empty()) return false;  // b nonempty here
  if (b.is_full()) return false;
  return subset(b.vrep(), a.hrep());
}

bool set_contains(const GSet& a, const Point& z) {
  if (a.is_empty()) return false;
  if (a.is_full()) return true;
  return contains_point(a.hrep(), z);
}

bool subset_of_interior(const GSet& a, const GSet& b) {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  if (b.is_full()) return true;
  if (a.is_full()) return false;  // b proper: int b cannot cover Z
  return strict_subset(a.vrep(), b.hrep());
}

bool exists_uniform_margin(const GSet& a, const GSet& b) {
  require_same_cone(a, b, "exists_uniform_margin");
  if (a.is_empty()) return true;
  if (b.is_full()) return true;
  if (b.is_empty()) return false;  // a nonempty here
  if (a.is_full()) return false;
  for (const auto& c : b.hrep().constraints) {
    ExtReal s = support(c.normal, a.vrep());
    if (s.is_pos_inf()) return false;          // a ray of A escapes B
    if (s.finite_value() >= c.offset) return false;  // margin not strictly negative
  }
  return true;
}

InclusionAudit inclusion_audit(const GSet& a, const GSet& b) {
  require_same_cone(a, b, "inclusion_audit");
  InclusionAudit rep;
  rep.not_in_int = !subset_of_interior(a, b);
  // Certificates live in W* = co M*.  M* is tried first; when A ⊄ int B the
  // separation can always be realized by a supporting facet normal of B, so
  // those (normalized into W*) complete the search.
  std::vector<DualVector> candidates = a.cone()->dual_base;
  if (b.is_poly()) {
    for (const auto& c : b.hrep().constraints) {
      Rat s = dot(c.normal, a.cone()->interior_point);
      if (s < 0) candidates.push_back(scale_vec(-1 / s, c.normal));
    }
  }
  for (const auto& m : candidates) {
    ExtReal pa = scalarize(a, m), pb = scalarize(b, m);
    if (pa <= pb && !(pb.is_neg_inf())) {
      rep.scalar_cert = m;
      break;
    }
  }
  rep.robust_not_subset = !exists_uniform_margin(a, b);
  // (a) => (b) => (c); the second step needs A nonempty (when A = B = ∅ the
  // certificate is vacuous but A ⊕ U = ∅ ⊆ B).
  if (rep.not_in_int && !rep.scalar_cert) rep.chain_ok = false;
  if (rep.scalar_cert && !a.is_empty() && !rep.robust_not_subset) rep.chain_ok = false;
  if (!rep.chain_ok) throw std::logic_error("inclusion_audit: implication chain violated");
  return rep;
}

}  // namespace setopt
