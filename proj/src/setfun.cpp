#include "setopt/setfun.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace setopt {

namespace {

// Unique solution of A x = b (columns independent), nullopt if inconsistent.
std::optional<Vec> solve_unique(const Matrix& a, const Vec& b) {
  if (a.empty()) return Vec{};
  const std::size_t rows = a.size(), cols = a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;  // 0 = 1 row
  if (pivots.size() < cols) return std::nullopt;  // underdetermined; rejected by validation
  Vec x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

// Homogeneous barycentric system for a simplex: columns (site_j, 1).
Matrix bary_matrix(const PLComplex& c, const std::vector<int>& simplex) {
  Matrix m(c.xdim + 1, Vec(simplex.size()));
  for (std::size_t j = 0; j < simplex.size(); ++j) {
    for (int i = 0; i < c.xdim; ++i) m[i][j] = c.sites[simplex[j]][i];
    m[c.xdim][j] = 1;
  }
  return m;
}

std::optional<Vec> barycentric(const PLComplex& c, const std::vector<int>& simplex, const Point& x) {
  Vec rhs = x;
  rhs.push_back(Rat(1));
  auto lam = solve_unique(bary_matrix(c, simplex), rhs);
  if (!lam) return std::nullopt;
  for (const auto& l : *lam)
    if (l < 0) return std::nullopt;
  return lam;
}

}  // namespace

void PLComplex::validate() const {
  if (sites.size() != values.size()) throw std::invalid_argument("pl map: site/value count mismatch");
  for (const auto& s : sites)
    if (static_cast<int>(s.size()) != xdim) throw std::invalid_argument("pl map: site dimension mismatch");
  for (const auto& v : values)
    if (static_cast<int>(v.size()) != zdim) throw std::invalid_argument("pl map: value dimension mismatch");
  for (const auto& sx : simplices) {
    if (sx.empty() || sx.size() > static_cast<std::size_t>(xdim) + 1)
      throw std::invalid_argument("pl map: bad simplex size");
    for (int i : sx)
      if (i < 0 || i >= static_cast<int>(sites.size())) throw std::invalid_argument("pl map: bad simplex index");
    Matrix m = bary_matrix(*this, sx);
    if (rank(m) != static_cast<int>(sx.size()))
      throw std::invalid_argument("pl map: degenerate simplex");
  }
  auto* self = const_cast<PLComplex*>(this);
  self->site_simplices.clear();
  self->simplex_bounds.clear();
  for (int s = 0; s < static_cast<int>(simplices.size()); ++s) {
    for (int i : simplices[s]) self->site_simplices[sites[i]].push_back(s);
    Point lo = sites[simplices[s][0]], hi = lo;
    for (int i : simplices[s])
      for (int d = 0; d < xdim; ++d) {
        if (sites[i][d] < lo[d]) lo[d] = sites[i][d];
        if (sites[i][d] > hi[d]) hi[d] = sites[i][d];
      }
    self->simplex_bounds.emplace_back(lo, hi);
  }
}

std::optional<Point> PLComplex::eval(const Point& x) const {
  for (std::size_t i = 0; i < sites.size(); ++i)
    if (sites[i] == x) return values[i];
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    if (s < simplex_bounds.size()) {
      bool inside = true;
      for (int d = 0; d < xdim && inside; ++d)
        inside = simplex_bounds[s].first[d] <= x[d] && x[d] <= simplex_bounds[s].second[d];
      if (!inside) continue;
    }
    const auto& sx = simplices[s];
    auto lam = barycentric(*this, sx, x);
    if (!lam) continue;
    Point v = zero_vec(zdim);
    for (std::size_t j = 0; j < sx.size(); ++j) v = add(v, scale_vec((*lam)[j], values[sx[j]]));
    return v;
  }
  return std::nullopt;
}

std::optional<PLComplex::FirstPiece> PLComplex::first_piece(const Point& x, const Point& u) const {
  if (is_zero(u)) return std::nullopt;
  // Sites index their incident simplices; other base points fall back to a
  // full scan.
  const std::vector<int>* incident = nullptr;
  if (auto it = site_simplices.find(x); it != site_simplices.end()) incident = &it->second;
  std::optional<FirstPiece> best;
  const std::size_t count = incident ? incident->size() : simplices.size();
  for (std::size_t si = 0; si < count; ++si) {
    const auto& sx = simplices[incident ? (*incident)[si] : static_cast<int>(si)];
    Matrix m = bary_matrix(*this, sx);
    Vec rhs_x = x;
    rhs_x.push_back(Rat(1));
    Vec rhs_u = u;
    rhs_u.push_back(Rat(0));
    auto la = solve_unique(m, rhs_x);
    auto lb = solve_unique(m, rhs_u);
    if (!la || !lb) continue;
    bool at_zero = true;
    for (const auto& l : *la) at_zero = at_zero && l >= 0;
    if (!at_zero) continue;
    // {t >= 0 | la + t*lb >= 0}: exit at the first coordinate driven negative.
    std::optional<Rat> t_end;
    bool dead = false;
    for (std::size_t j = 0; j < la->size(); ++j) {
      if ((*lb)[j] < 0) {
        Rat bound = -(*la)[j] / (*lb)[j];
        if (bound == 0) dead = true;
        if (!t_end || bound < *t_end) t_end = bound;
      }
    }
    if (dead || !t_end) continue;  // u leaves instantly or stays forever (impossible for u != 0)
    Point slope = zero_vec(zdim);
    for (std::size_t j = 0; j < sx.size(); ++j) slope = add(slope, scale_vec((*lb)[j], values[sx[j]]));
    if (!best || *t_end > best->t_end) best = FirstPiece{*t_end, slope};
  }
  return best;
}

PLComplex PLComplex::restrict_segment(const Point& x0, const Point& x1) const {
  PLComplex out;
  out.xdim = 1;
  out.zdim = zdim;
  Point u = sub(x1, x0);
  auto value_at = [&](const Rat& t) { return eval(add(x0, scale_vec(t, u))); };

  if (is_zero(u)) {
    if (auto v = value_at(Rat(0))) {
      out.sites = {{Rat(0)}, {Rat(1)}};
      out.values = {*v, *v};
      out.simplices = {{0, 1}};
    }
    return out;
  }

  // Coverage intervals of [0,1] per simplex, possibly degenerate.
  std::vector<std::pair<Rat, Rat>> intervals;
  for (const auto& sx : simplices) {
    Matrix m = bary_matrix(*this, sx);
    Vec rhs_x = x0;
    rhs_x.push_back(Rat(1));
    Vec rhs_u = u;
    rhs_u.push_back(Rat(0));
    auto la = solve_unique(m, rhs_x);
    auto lb = solve_unique(m, rhs_u);
    if (!la || !lb) continue;
    Rat lo = 0, hi = 1;
    bool feas = true;
    for (std::size_t j = 0; j < la->size() && feas; ++j) {
      Rat a = (*la)[j], b = (*lb)[j];
      if (b == 0) {
        feas = a >= 0;
      } else if (b > 0) {
        lo = std::max(lo, Rat(-a / b));
      } else {
        hi = std::min(hi, Rat(-a / b));
      }
    }
    if (feas && lo <= hi) intervals.emplace_back(lo, hi);
  }
  // Isolated sites crossed by the segment.
  for (std::size_t i = 0; i < sites.size(); ++i) {
    Point d = sub(sites[i], x0);
    std::optional<Rat> t;
    bool on_line = true;
    for (int k = 0; k < xdim && on_line; ++k) {
      if (u[k] != 0) {
        Rat cand = d[k] / u[k];
        if (t && *t != cand) on_line = false;
        t = cand;
      } else if (d[k] != 0) {
        on_line = false;
      }
    }
    if (on_line && t && *t >= 0 && *t <= 1) intervals.emplace_back(*t, *t);
  }
  if (intervals.empty()) return out;

  std::sort(intervals.begin(), intervals.end());
  // Merge into chunks, keeping every interval endpoint as a breakpoint.
  std::vector<std::vector<Rat>> chunks;
  Rat cur_lo = intervals[0].first, cur_hi = intervals[0].second;
  std::vector<Rat> marks = {cur_lo, cur_hi};
  auto flush = [&]() {
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    chunks.push_back(marks);
  };
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].first <= cur_hi) {
      cur_hi = std::max(cur_hi, intervals[i].second);
      marks.push_back(intervals[i].first);
      marks.push_back(intervals[i].second);
    } else {
      flush();
      cur_lo = intervals[i].first;
      cur_hi = intervals[i].second;
      marks = {cur_lo, cur_hi};
    }
  }
  flush();

  for (const auto& chunk : chunks) {
    int base = static_cast<int>(out.sites.size());
    for (const auto& t : chunk) {
      auto v = value_at(t);
      if (!v) throw std::logic_error("restrict_segment: uncovered breakpoint");
      out.sites.push_back({t});
      out.values.push_back(*v);
    }
    if (chunk.size() == 1) {
      out.simplices.push_back({base});
    } else {
      for (std::size_t i = 0; i + 1 < chunk.size(); ++i)
        out.simplices.push_back({base + static_cast<int>(i), base + static_cast<int>(i) + 1});
    }
  }
  return out;
}

SetFun SetFun::extension(PLComplex psi, ConePtr cone, bool declared_convex) {
  psi.validate();
  if (psi.zdim != cone->dim) throw std::invalid_argument("extension: image dimension mismatch");
  SetFun f;
  f.backend_ = Backend::Extension;
  f.cone_ = std::move(cone);
  f.xdim_ = psi.xdim;
  f.declared_convex_ = declared_convex;
  f.pl_ = std::make_shared<PLComplex>(std::move(psi));
  return f;
}

SetFun SetFun::affine_tracks(AffineTracks tr, ConePtr cone, bool declared_convex) {
  if (tr.zdim != cone->dim) throw std::invalid_argument("tracks: image dimension mismatch");
  if (tr.tracks.empty()) throw std::invalid_argument("tracks: need at least one vertex track");
  SetFun f;
  f.backend_ = Backend::Tracks;
  f.cone_ = std::move(cone);
  f.xdim_ = 1;
  f.declared_convex_ = declared_convex;
  f.tracks_ = std::make_shared<AffineTracks>(std::move(tr));
  return f;
}

SetFun SetFun::profile_family(ScalarProfiles pr, ConePtr cone_or_null) {
  SetFun f;
  f.backend_ = Backend::Profiles;
  f.cone_ = std::move(cone_or_null);
  f.xdim_ = 1;
  f.profiles_ = std::make_shared<ScalarProfiles>(std::move(pr));
  return f;
}

std::optional<GSet> SetFun::eval(const Point& x) const {
  if (static_cast<int>(x.size()) != xdim_) throw std::invalid_argument("eval: dimension mismatch");
  switch (backend_) {
    case Backend::Extension: {
      auto v = pl_->eval(x);
      if (!v) return GSet::empty(cone_);
      return GSet::translated_cone(*v, cone_);
    }
    case Backend::Tracks: {
      const auto& tr = *tracks_;
      if (x[0] < tr.lo || x[0] > tr.hi) return GSet::empty(cone_);
      VRep raw{tr.zdim, {}, tr.extra_rays};
      for (const auto& [base, vel] : tr.tracks) raw.vertices.push_back(add(base, scale_vec(x[0], vel)));
      return GSet::from_vrep(raw, cone_);
    }
    default:
      return std::nullopt;
  }
}

bool SetFun::in_domain(const Point& x) const {
  if (backend_ == Backend::Extension) return pl_->eval(x).has_value();
  if (backend_ == Backend::Tracks) return x[0] >= tracks_->lo && x[0] <= tracks_->hi;
  // Profiles: the domain is where some profile is finite.
  for (const auto& e : profiles_->entries)
    if (scalar_eval(e.fn, x[0]).is_finite()) return true;
  return false;
}

std::optional<ExtReal> SetFun::scalarize_at(const Point& x, const DualVector& zstar) const {
  if (backend_ == Backend::Profiles) {
    for (const auto& e : profiles_->entries)
      if (e.zstar == zstar) return scalar_eval(e.fn, x[0]);
    return std::nullopt;
  }
  auto g = eval(x);
  return scalarize(*g, zstar);
}

DiniScalarResult SetFun::scalar_segment_dini(const Point& x0, const Point& u, const DualVector& zstar,
                                             const Rat& t0, int dir) const {
  switch (backend_) {
    case Backend::Extension: {
      Point x_at = add(x0, scale_vec(t0, u));
      auto v = pl_->eval(x_at);
      if (!v) return {ExtReal::neg_inf(), ExtReal::neg_inf(), true, 0};
      if (is_zero(u)) return {ExtReal(0), ExtReal(0), true, 0};
      Point step = dir > 0 ? u : neg(u);
      auto piece = pl_->first_piece(x_at, step);
      if (!piece) return {ExtReal::pos_inf(), ExtReal::pos_inf(), true, 0};
      ExtReal s(Rat(-dot(zstar, piece->slope)));
      return {s, s, true, 0};
    }
    case Backend::Tracks: {
      const auto& tr = *tracks_;
      Rat p = x0[0] + t0 * u[0];
      Rat delta = (dir > 0 ? u[0] : -u[0]);
      if (p < tr.lo || p > tr.hi) return {ExtReal::neg_inf(), ExtReal::neg_inf(), true, 0};
      // A violating ray makes every finite-t value -inf.
      bool neg_inf_on_domain = false;
      for (const auto& r : tr.extra_rays)
        if (dot(zstar, r) > 0) neg_inf_on_domain = true;
      for (const auto& r : cone_->c_vrep.rays)
        if (dot(zstar, r) > 0) neg_inf_on_domain = true;
      bool exits = (delta > 0 && p == tr.hi) || (delta < 0 && p == tr.lo);
      if (neg_inf_on_domain)
        return exits ? DiniScalarResult{ExtReal::pos_inf(), ExtReal::pos_inf(), true, 0}
                     : DiniScalarResult{ExtReal::neg_inf(), ExtReal::neg_inf(), true, 0};
      if (delta == 0) return {ExtReal(0), ExtReal(0), true, 0};
      if (exits) return {ExtReal::pos_inf(), ExtReal::pos_inf(), true, 0};
      // phi(q) = min_k (-z*.v_k(q)), affine pieces; the one-sided slope is
      // the extreme slope over the active tracks.
      Rat best;
      bool first = true;
      for (const auto& [base, vel] : tr.tracks) {
        Rat val = -dot(zstar, base) - p * dot(zstar, vel);
        if (first || val < best) best = val, first = false;
      }
      std::optional<Rat> slope;
      for (const auto& [base, vel] : tr.tracks) {
        Rat val = -dot(zstar, base) - p * dot(zstar, vel);
        if (val != best) continue;
        Rat s = -dot(zstar, vel) * delta;
        if (!slope || s < *slope) slope = s;
      }
      return {ExtReal(*slope), ExtReal(*slope), true, 0};
    }
    default: {
      if (!(t0 == 0 && dir > 0 && x0 == Point{Rat(0)} && u == Point{Rat(1)}))
        throw std::invalid_argument("profile backend: derivatives anchor at the declared segment 0 -> 1");
      for (const auto& e : profiles_->entries)
        if (e.zstar == zstar) return scalar_dini(e.fn, Rat(0), +1);
      throw std::invalid_argument("profile backend: z* not on the declared grid");
    }
  }
}

SetFun SetFun::restrict(const Point& x0, const Point& x1) const {
  switch (backend_) {
    case Backend::Extension:
      return extension(pl_->restrict_segment(x0, x1), cone_, declared_convex_);
    case Backend::Tracks: {
      const auto& tr = *tracks_;
      AffineTracks out;
      out.zdim = tr.zdim;
      out.extra_rays = tr.extra_rays;
      Rat d = x1[0] - x0[0];
      for (const auto& [base, vel] : tr.tracks)
        out.tracks.emplace_back(add(base, scale_vec(x0[0], vel)), scale_vec(d, vel));
      // Valid t-range: x0 + t*d in [lo,hi], clipped to [0,1].
      if (d == 0) {
        bool inside = x0[0] >= tr.lo && x0[0] <= tr.hi;
        out.lo = inside ? Rat(0) : Rat(1);
        out.hi = inside ? Rat(1) : Rat(0);
      } else {
        Rat a = (tr.lo - x0[0]) / d, b = (tr.hi - x0[0]) / d;
        out.lo = std::max(Rat(0), std::min(a, b));
        out.hi = std::min(Rat(1), std::max(a, b));
      }
      return affine_tracks(std::move(out), cone_, declared_convex_);
    }
    default:
      if (x0 == Point{Rat(0)} && x1 == Point{Rat(1)}) return *this;
      throw std::invalid_argument("profile backend: only the declared segment 0 -> 1 can be restricted");
  }
}

ConvexityReport check_convexity_sampled(const SetFun& f, const std::vector<ConvexitySample>& samples) {
  ConvexityReport rep;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (s.lambda <= 0 || s.lambda >= 1) throw std::invalid_argument("convexity sample: lambda in (0,1)");
    Point combo = add(scale_vec(s.lambda, s.x), scale_vec(1 - s.lambda, s.y));
    ++rep.checked;
    auto fc = f.eval(combo), fx = f.eval(s.x), fy = f.eval(s.y);
    if (fc && fx && fy) {
      GSet rhs = oplus(scale(s.lambda, *fx), scale(1 - s.lambda, *fy));
      if (!leq(*fc, rhs)) rep.set_violations.push_back(static_cast<int>(i));
    } else {
      rep.exact = false;
    }
    // Scalar criterion on the same sample, over the declared dual grid.
    std::vector<DualVector> grid;
    if (f.backend() == SetFun::Backend::Profiles) {
      for (const auto& e : f.profiles().entries) grid.push_back(e.zstar);
    } else {
      grid = f.cone()->dual_base;
    }
    bool scalar_bad = false;
    for (const auto& m : grid) {
      auto pc = f.scalarize_at(combo, m), px = f.scalarize_at(s.x, m), py = f.scalarize_at(s.y, m);
      if (!pc || !px || !py) continue;
      ExtReal bound = inf_add(scale(s.lambda, *px), scale(1 - s.lambda, *py));
      if (!(*pc <= bound)) scalar_bad = true;
    }
    if (scalar_bad) rep.scalar_violations.push_back(static_cast<int>(i));
  }
  return rep;
}

}  // namespace setopt
