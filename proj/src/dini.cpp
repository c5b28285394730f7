#include "setopt/dini.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace setopt {

GSet quotient(const SetFun& f, const Point& x, const Point& u, const Rat& t) {
  if (t <= 0) throw std::invalid_argument("quotient: t must be positive");
  auto fx = f.eval(x);
  auto fxt = f.eval(add(x, scale_vec(t, u)));
  if (!fx || !fxt) throw std::invalid_argument("quotient: backend has no set values");
  return scale(1 / t, residual(*fxt, *fx));
}

namespace {

// Ladder assertion for the convex path: the quotient decreases (in the
// lattice order) as t decreases, and stabilizes below the data breakpoint.
DiniSetResult convex_from_ladder(const SetFun& f, const Point& x, const Point& u, const Rat& t_bar) {
  std::vector<Rat> ladder = {t_bar, t_bar / 2, t_bar / 4, t_bar / 8};
  std::vector<GSet> qs;
  for (const auto& t : ladder) qs.push_back(quotient(f, x, u, t));
  for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
    if (!leq(qs[i + 1], qs[i])) throw std::logic_error("set_dini_convex: quotient not monotone");
  }
  if (!(qs[2] == qs[3])) throw std::logic_error("set_dini_convex: quotient not constant below breakpoint");
  DiniSetResult r{qs[3], qs[3], true, DiniSetResult::Via::PrimalQuotient, 0};
  return r;
}

bool neg_dir_in_cone(const ConePtr& cone, const Vec& d) {
  return contains_point(cone->c_hrep, neg(d));
}

}  // namespace

DiniSetResult set_dini_convex(const SetFun& f, const Point& x, const Point& u) {
  if (f.backend() == SetFun::Backend::Profiles)
    throw std::invalid_argument("set_dini_convex: profile backends have no primal set values");
  if (!f.declared_convex())
    throw std::invalid_argument("set_dini_convex: function is not declared convex");
  GSet fx = *f.eval(x);
  if (fx.is_empty()) {
    GSet full = GSet::full(f.cone());
    return {full, full, true, DiniSetResult::Via::PrimalQuotient, 0};
  }
  if (is_zero(u)) {
    GSet rec = recession(fx);
    return {rec, rec, true, DiniSetResult::Via::PrimalQuotient, 0};
  }

  if (f.backend() == SetFun::Backend::Extension) {
    auto piece = f.pl().first_piece(x, u);
    if (!piece) {
      GSet e = GSet::empty(f.cone());
      return {e, e, true, DiniSetResult::Via::PrimalQuotient, 0};
    }
    DiniSetResult r = convex_from_ladder(f, x, u, piece->t_end);
    // psi is affine on the first piece, so the quotient is the slope's cut.
    GSet expected = GSet::translated_cone(piece->slope, f.cone());
    if (!(r.upper == expected)) throw std::logic_error("set_dini_convex: quotient disagrees with slope");
    return r;
  }

  // Affine tracks: the track family is affine on the whole parameter range,
  // so the residual offsets are linear in t below the range boundary.
  const auto& tr = f.tracks();
  Rat p = x[0], d = u[0];
  Rat t_max;
  if (d > 0) {
    t_max = (tr.hi - p) / d;
  } else {
    t_max = (tr.lo - p) / d;
  }
  if (t_max <= 0) {
    GSet e = GSet::empty(f.cone());  // the segment leaves dom f immediately
    return {e, e, true, DiniSetResult::Via::PrimalQuotient, 0};
  }
  return convex_from_ladder(f, x, u, t_max);
}

DiniSetResult set_dini_sampled(const SetFun& f, const Point& x, const Point& u,
                               const std::vector<Rat>& ts) {
  if (ts.size() < 2) throw std::invalid_argument("set_dini_sampled: need at least two samples");
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    if (!(ts[i] > ts[i + 1] && ts[i + 1] > 0))
      throw std::invalid_argument("set_dini_sampled: t-sequence must be strictly decreasing and positive");

  const std::size_t n = ts.size();
  std::vector<GSet> q;
  q.reserve(n);
  for (const auto& t : ts) q.push_back(quotient(f, x, u, t));
  ConePtr cone = f.cone();

  auto finish = [&](GSet upper, GSet lower, int stable) {
    if (!leq(lower, upper)) {  // estimates must satisfy lower ≼ upper
      upper = sup_family(q, cone);
      lower = inf_family(q, cone);
    }
    return DiniSetResult{upper, lower, false, DiniSetResult::Via::PrimalQuotient, stable};
  };

  int suffix = 1;
  for (std::size_t i = n - 1; i > 0 && q[i - 1] == q.back(); --i) ++suffix;
  if (static_cast<std::size_t>(suffix) == n) return finish(q.back(), q.back(), suffix);

  // Translated-cone analysis: classify recurrent values and vertex drifts.
  bool cone_mode = true;
  for (const auto& g : q) cone_mode = cone_mode && (g.is_empty() || as_translated_cone(g).has_value());
  if (cone_mode) {
    std::vector<GSet> distinct;
    std::vector<std::vector<std::size_t>> occs;
    for (std::size_t i = 0; i < n; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < distinct.size(); ++j)
        if (distinct[j] == q[i]) {
          occs[j].push_back(i);
          found = true;
          break;
        }
      if (!found) {
        distinct.push_back(q[i]);
        occs.push_back({i});
      }
    }
    std::vector<GSet> recurrent;
    std::vector<std::size_t> transient_tail;  // indices of non-recurrent tail quotients
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      bool first_half = occs[j].front() < n / 2;
      bool second_half = occs[j].back() >= n / 2;
      if (first_half && second_half) {
        recurrent.push_back(distinct[j]);
      } else if (second_half) {
        for (auto i : occs[j])
          if (i >= n / 2) transient_tail.push_back(i);
      }
    }
    std::sort(transient_tail.begin(), transient_tail.end());

    std::vector<Vec> drift_dirs;
    for (std::size_t k = 0; k + 1 < transient_tail.size(); ++k) {
      const auto a = as_translated_cone(q[transient_tail[k]]);
      const auto b = as_translated_cone(q[transient_tail[k + 1]]);
      if (!a || !b) continue;  // Empty members carry no drift
      Vec d = primitive(sub(*b, *a));
      if (is_zero(d)) continue;
      if (std::find(drift_dirs.begin(), drift_dirs.end(), d) == drift_dirs.end()) drift_dirs.push_back(d);
    }

    bool recurrent_empty_member = false;
    for (const auto& g : recurrent) recurrent_empty_member = recurrent_empty_member || g.is_empty();

    bool diverging_out = !drift_dirs.empty();
    for (const auto& d : drift_dirs) diverging_out = diverging_out && !neg_dir_in_cone(cone, d);

    GSet upper = GSet::full(cone);
    if (recurrent_empty_member || diverging_out) {
      upper = GSet::empty(cone);
    } else if (!recurrent.empty()) {
      upper = sup_family(recurrent, cone);
    } else {
      upper = sup_family(q, cone);
    }

    // Lower estimate: hull of the recurrent apexes plus drift rays; the
    // transients wash out in the tail infima.
    VRep gen{cone->dim, {}, drift_dirs};
    for (const auto& g : recurrent)
      if (auto apex = as_translated_cone(g)) gen.vertices.push_back(*apex);
    GSet lower = GSet::empty(cone);
    if (gen.vertices.empty() && diverging_out) {
      lower = GSet::empty(cone);
    } else if (!gen.vertices.empty()) {
      lower = GSet::from_vrep(gen, cone);
    } else {
      lower = inf_family(q, cone);
    }
    return finish(upper, lower, suffix);
  }

  // Plateau scan over tail sups and tail infs.
  auto plateau = [&](bool sup_side) {
    std::vector<GSet> tails;
    GSet acc = q.back();
    tails.push_back(acc);
    for (std::size_t i = n - 1; i-- > 0;) {
      acc = sup_side ? sup_family({acc, q[i]}, cone) : inf_family({acc, q[i]}, cone);
      tails.push_back(acc);  // tails[k] aggregates q[n-1-k..n-1]
    }
    GSet best = tails.back();
    int best_len = 1, cur = 1;
    for (std::size_t i = 1; i < tails.size(); ++i) {
      cur = tails[i] == tails[i - 1] ? cur + 1 : 1;
      if (cur >= best_len) {
        best_len = cur;
        best = tails[i];
      }
    }
    return best;
  };
  return finish(plateau(true), plateau(false), suffix);
}

RawAssembly assemble_raw(int dim, const std::vector<std::pair<DualVector, ExtReal>>& derivs) {
  HRep h = HRep::full(dim);
  for (const auto& [zstar, v] : derivs) {
    if (v.is_pos_inf()) continue;  // finite-scalarization form drops these
    if (v.is_neg_inf()) continue;  // whole-space halfspace
    h.constraints.push_back(Halfspace{zstar, Rat(-v.finite_value())});
  }
  h = canonicalize(h);
  return RawAssembly{h, h_to_v(h)};
}

GSet assemble_from_scalar(const std::vector<std::pair<DualVector, ExtReal>>& derivs, ConePtr cone) {
  RawAssembly raw = assemble_raw(cone->dim, derivs);
  if (raw.v.is_empty()) return GSet::empty(std::move(cone));
  return GSet::from_vrep(raw.v, std::move(cone));
}

namespace {

// Reassembly per the paper's representation, without skipping +inf values:
// a +inf scalar derivative forces the empty set.
GSet assemble_no_skip(const std::vector<std::pair<DualVector, ExtReal>>& derivs, const ConePtr& cone) {
  std::vector<std::pair<DualVector, ExtReal>> finite;
  for (const auto& d : derivs) {
    if (d.second.is_pos_inf()) return GSet::empty(cone);
    finite.push_back(d);
  }
  return assemble_from_scalar(finite, cone);
}

TriState equality_state(bool equal, bool exact) {
  if (!equal) return TriState::Fails;
  return exact ? TriState::Holds : TriState::Unknown;
}

}  // namespace

RegularityReport regularity_audit(const SetFun& f, const Point& x, const Point& u,
                                  const DiniSetResult& deriv, const std::vector<Rat>* ts) {
  RegularityReport rep;
  rep.exact = deriv.exact;
  std::vector<std::pair<DualVector, ExtReal>> uppers, lowers;
  for (const auto& m : f.cone()->dual_base) {
    RegularityEntry e;
    e.zstar = m;
    if (ts) {
      SampleFun sf;
      sf.value_at_zero = *f.scalarize_at(x, m);
      for (const auto& t : *ts) sf.samples.emplace_back(t, *f.scalarize_at(add(x, scale_vec(t, u)), m));
      e.scalar = scalar_dini(ScalarSegmentFn{sf}, Rat(0), +1);
    } else {
      e.scalar = f.scalar_segment_dini(x, u, m, Rat(0), +1);
    }
    rep.exact = rep.exact && e.scalar.exact;
    e.sigma_upper = scalarize(deriv.upper, m);
    e.sigma_lower = scalarize(deriv.lower, m);
    if (!(e.scalar.upper <= e.sigma_upper))
      rep.violations.push_back("phi^up(" + vec_to_string(m) + ") exceeds -sigma(z*|f^up)");
    if (!(e.scalar.lower <= e.sigma_lower))
      rep.violations.push_back("phi^down(" + vec_to_string(m) + ") exceeds -sigma(z*|f^down)");
    e.sr_upper = equality_state(e.scalar.upper == e.sigma_upper, deriv.exact && e.scalar.exact);
    e.sr_lower = equality_state(e.scalar.lower == e.sigma_lower, deriv.exact && e.scalar.exact);
    uppers.emplace_back(m, e.scalar.upper);
    lowers.emplace_back(m, e.scalar.lower);
    rep.entries.push_back(std::move(e));
  }
  GSet up_asm = assemble_no_skip(uppers, f.cone());
  GSet low_asm = assemble_no_skip(lowers, f.cone());
  rep.wr_upper = equality_state(up_asm == deriv.upper, rep.exact);
  rep.wr_lower = equality_state(low_asm == deriv.lower, rep.exact);
  return rep;
}

}  // namespace setopt
