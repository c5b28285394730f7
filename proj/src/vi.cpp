#include "setopt/vi.hpp"

#include <stdexcept>

namespace setopt {

const char* to_string(PredicateId p) {
  switch (p) {
    case PredicateId::WMin: return "W-Min";
    case PredicateId::WlMin: return "W-l-Min";
    case PredicateId::ScWMin: return "Sc-W-Min";
    case PredicateId::WSVI: return "W-SVI";
    case PredicateId::ScWSVI: return "Sc-W-SVI";
    case PredicateId::WMVI: return "W-MVI";
    default: return "Sc-W-MVI";
  }
}

ViOptions ViOptions::dyadic(int n) {
  ViOptions o;
  Rat t(1, 2);
  for (int i = 0; i < n; ++i) {
    o.ts.push_back(t);
    t /= 2;
  }
  return o;
}

namespace {

void require_in_domain(const SetFun& f, const Point& x0) {
  if (!f.in_domain(x0)) throw std::invalid_argument("predicate: x0 is outside dom f");
}

bool zero_in_interior(const GSet& g) {
  if (g.is_full()) return true;
  if (g.is_empty()) return false;
  return strict_subset(VRep::point(zero_vec(g.cone()->dim)), g.hrep());
}

DiniSetResult derivative(const SetFun& f, const Point& x, const Point& u, const ViOptions& opt) {
  if (f.declared_convex()) return set_dini_convex(f, x, u);
  return set_dini_sampled(f, x, u, opt.ts);
}

DiniScalarResult scalar_derivative(const SetFun& f, const Point& x, const Point& u,
                                   const DualVector& zstar, const ViOptions& opt) {
  if (f.declared_convex() || f.backend() == SetFun::Backend::Profiles)
    return f.scalar_segment_dini(x, u, zstar, Rat(0), +1);
  SampleFun sf;
  sf.value_at_zero = *f.scalarize_at(x, zstar);
  for (const auto& t : opt.ts) sf.samples.emplace_back(t, *f.scalarize_at(add(x, scale_vec(t, u)), zstar));
  return scalar_dini(ScalarSegmentFn{sf}, Rat(0), +1);
}

}  // namespace

PredicateResult is_weak_l_min(const SetFun& f, const Point& x0, const std::vector<Point>& X) {
  require_in_domain(f, x0);
  PredicateResult r;
  auto fx0 = f.eval(x0);
  if (!fx0) return r;  // profile backend: no set values
  if (fx0->is_full()) {
    r.status = TriState::Holds;
    return r;
  }
  for (const auto& x : X) {
    if (subset_of_interior(*fx0, *f.eval(x))) {
      r.status = TriState::Fails;
      r.witness_point = x;
      return r;
    }
  }
  r.status = TriState::Holds;
  return r;
}

PredicateResult is_weak_min(const SetFun& f, const Point& x0, const std::vector<Point>& X) {
  require_in_domain(f, x0);
  PredicateResult r;
  auto fx0 = f.eval(x0);
  if (!fx0) return r;
  if (fx0->is_full()) {
    r.status = TriState::Holds;
    return r;
  }
  for (const auto& x : X) {
    if (exists_uniform_margin(*fx0, *f.eval(x))) {
      r.status = TriState::Fails;
      r.witness_point = x;
      return r;
    }
  }
  r.status = TriState::Holds;
  return r;
}

PredicateResult is_sc_weak_min(const SetFun& f, const Point& x0, const std::vector<Point>& X) {
  require_in_domain(f, x0);
  PredicateResult r;
  if (f.backend() == SetFun::Backend::Profiles) return r;
  if (f.eval(x0)->is_full()) {
    r.status = TriState::Holds;
    return r;
  }
  for (const auto& x : X) {
    bool certified = false;
    for (const auto& m : f.cone()->dual_base) {
      ExtReal p0 = *f.scalarize_at(x0, m), px = *f.scalarize_at(x, m);
      if (p0 <= px && !px.is_neg_inf()) {
        certified = true;
        r.certificate = m;
        break;
      }
    }
    if (!certified) {
      r.status = TriState::Fails;
      r.witness_point = x;
      r.certificate.reset();
      return r;
    }
  }
  r.status = TriState::Holds;
  return r;
}

PredicateResult solves_wsvi(const SetFun& f, const Point& x0, const std::vector<Point>& X,
                            const ViOptions& opt) {
  require_in_domain(f, x0);
  PredicateResult r;
  if (f.backend() == SetFun::Backend::Profiles) return r;
  GSet fx0 = *f.eval(x0);
  if (fx0.is_full()) {
    r.status = TriState::Holds;
    return r;
  }
  GSet rec0 = recession(fx0);
  bool all_exact = true;
  for (const auto& x : X) {
    DiniSetResult d = derivative(f, x0, sub(x, x0), opt);
    all_exact = all_exact && d.exact;
    bool zero_in = zero_in_interior(d.upper);
    if (d.exact) {
      // Equivalent recession form of the inequality: 0+f(x0) not inside
      // int f'(x0, x-x0).
      bool star = !subset_of_interior(rec0, d.upper);
      if (star == zero_in) throw std::logic_error("W-SVI: recession form disagrees with 0-form");
    }
    if (zero_in) {
      r.status = TriState::Fails;
      r.witness_point = x;
      r.exact = d.exact;
      return r;
    }
  }
  r.status = TriState::Holds;
  r.exact = all_exact;
  return r;
}

PredicateResult solves_sc_wsvi(const SetFun& f, const Point& x0, const std::vector<Point>& X,
                               const ViOptions& opt) {
  require_in_domain(f, x0);
  PredicateResult r;
  if (f.backend() == SetFun::Backend::Profiles) return r;
  if (f.eval(x0)->is_full()) {
    r.status = TriState::Holds;
    return r;
  }
  bool all_exact = true;
  for (const auto& x : X) {
    bool certified = false;
    for (const auto& m : f.cone()->dual_base) {
      DiniScalarResult d = scalar_derivative(f, x0, sub(x, x0), m, opt);
      all_exact = all_exact && d.exact;
      if (ExtReal(0) <= d.lower) {
        certified = true;
        r.certificate = m;
        break;
      }
    }
    if (!certified) {
      r.status = TriState::Fails;
      r.witness_point = x;
      r.certificate.reset();
      r.exact = all_exact;
      return r;
    }
  }
  r.status = TriState::Holds;
  r.exact = all_exact;
  return r;
}

PredicateResult solves_wmvi(const SetFun& f, const Point& x0, const std::vector<Point>& X,
                            const ViOptions& opt) {
  require_in_domain(f, x0);
  PredicateResult r;
  if (f.backend() == SetFun::Backend::Profiles) return r;
  if (f.eval(x0)->is_full()) {
    r.status = TriState::Holds;
    return r;
  }
  bool all_exact = true;
  for (const auto& x : X) {
    GSet fx = *f.eval(x);
    if (fx.is_empty()) continue;  // f'(x,.) = Z is never inside int 0+f(x) = int(empty)
    DiniSetResult d = derivative(f, x, sub(x0, x), opt);
    all_exact = all_exact && d.exact;
    if (subset_of_interior(d.upper, recession(fx))) {
      r.status = TriState::Fails;
      r.witness_point = x;
      r.exact = d.exact;
      return r;
    }
  }
  r.status = TriState::Holds;
  r.exact = all_exact;
  return r;
}

PredicateResult solves_sc_wmvi(const SetFun& f, const Point& x0, const std::vector<Point>& X,
                               const ViOptions& opt) {
  require_in_domain(f, x0);
  PredicateResult r;
  if (f.backend() == SetFun::Backend::Profiles) return r;
  if (f.eval(x0)->is_full()) {
    r.status = TriState::Holds;
    return r;
  }
  bool all_exact = true;
  for (const auto& x : X) {
    bool certified = false;
    for (const auto& m : f.cone()->dual_base) {
      ExtReal px = *f.scalarize_at(x, m);
      if (px.is_neg_inf()) continue;
      DiniScalarResult d = scalar_derivative(f, x, sub(x0, x), m, opt);
      all_exact = all_exact && d.exact;
      if (d.upper <= ExtReal(0)) {
        certified = true;
        r.certificate = m;
        break;
      }
    }
    if (!certified) {
      r.status = TriState::Fails;
      r.witness_point = x;
      r.certificate.reset();
      r.exact = all_exact;
      return r;
    }
  }
  r.status = TriState::Holds;
  r.exact = all_exact;
  return r;
}

DiagramReport implication_audit(const SetFun& f, const std::vector<Point>& candidates,
                                const std::vector<Point>& X, const ViOptions& opt) {
  DiagramReport rep;

  // Convexity hypothesis: the declaration, cross-checked on sampled pairs.
  bool convex = f.declared_convex();
  if (convex && f.backend() != SetFun::Backend::Profiles) {
    std::vector<ConvexitySample> samples;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      for (std::size_t j = 0; j < X.size(); ++j) {
        if ((i + j) % 3 == 0 && samples.size() < 64)
          samples.push_back({candidates[i], X[j], Rat(1, 2)});
      }
    auto cr = check_convexity_sampled(f, samples);
    if (!cr.set_violations.empty() || !cr.scalar_violations.empty()) {
      convex = false;
      rep.convexity_findings.push_back("declared convex but sampled audit found violations");
    }
  }
  bool extension = f.backend() == SetFun::Backend::Extension;

  for (const auto& x0 : candidates) {
    if (!f.in_domain(x0)) continue;
    CandidateReport cr;
    cr.x0 = x0;
    cr.convex_hypothesis = convex;
    cr.extension_backend = extension;

    // M*-l.s.c. of every restriction at 0: PL and track data interpolate
    // continuously on closed pieces and jump only to +inf, so the restricted
    // scalarizations are l.s.c.; profile backends must certify per entry.
    if (f.backend() == SetFun::Backend::Profiles) {
      cr.lsc_hypothesis = true;
      for (const auto& e : f.profiles().entries)
        cr.lsc_hypothesis = cr.lsc_hypothesis && check_lsc_at(e.fn, Rat(0)) == TriState::Holds;
    } else {
      cr.lsc_hypothesis = true;
    }

    cr.predicates[PredicateId::WMin] = is_weak_min(f, x0, X);
    cr.predicates[PredicateId::WlMin] = is_weak_l_min(f, x0, X);
    cr.predicates[PredicateId::ScWMin] = is_sc_weak_min(f, x0, X);
    cr.predicates[PredicateId::WSVI] = solves_wsvi(f, x0, X, opt);
    cr.predicates[PredicateId::ScWSVI] = solves_sc_wsvi(f, x0, X, opt);
    cr.predicates[PredicateId::WMVI] = solves_wmvi(f, x0, X, opt);
    cr.predicates[PredicateId::ScWMVI] = solves_sc_wmvi(f, x0, X, opt);

    auto holds = [&](PredicateId p) { return cr.predicates[p].status == TriState::Holds; };
    auto fails = [&](PredicateId p) { return cr.predicates[p].status == TriState::Fails; };
    auto exact = [&](PredicateId p) { return cr.predicates[p].exact; };

    auto check_arrow = [&](PredicateId a, PredicateId b, const char* name, bool hypotheses) {
      if (!hypotheses) return;
      if (!exact(a) || !exact(b)) return;
      if (holds(a) && fails(b))
        cr.implication_violations.push_back(std::string(name) + " violated at x0");
      if (holds(b) && fails(a))
        cr.strictness_notes.push_back(std::string(name) + ": converse gap witnessed");
    };

    check_arrow(PredicateId::WlMin, PredicateId::ScWMin, "W-l-Min => Sc-W-Min", true);
    check_arrow(PredicateId::ScWMin, PredicateId::WMin, "Sc-W-Min => W-Min", true);
    check_arrow(PredicateId::WMin, PredicateId::WSVI, "W-Min => W-SVI (Stampacchia)", convex);
    check_arrow(PredicateId::WSVI, PredicateId::WMin, "W-SVI => W-Min (Stampacchia)", convex);
    check_arrow(PredicateId::ScWSVI, PredicateId::WSVI, "Sc-W-SVI => W-SVI", convex);
    check_arrow(PredicateId::WSVI, PredicateId::ScWSVI, "W-SVI => Sc-W-SVI (SR)", convex && extension);
    check_arrow(PredicateId::ScWSVI, PredicateId::ScWMin, "Sc-W-SVI => Sc-W-Min", convex);
    check_arrow(PredicateId::ScWMin, PredicateId::ScWSVI, "Sc-W-Min => Sc-W-SVI (finite M*)", convex);
    check_arrow(PredicateId::ScWMin, PredicateId::ScWMVI, "Sc-W-Min => Sc-W-MVI", convex);
    check_arrow(PredicateId::ScWMVI, PredicateId::ScWMin, "Sc-W-MVI => Sc-W-Min (M*-l.s.c.)",
                convex && cr.lsc_hypothesis);
    check_arrow(PredicateId::WMVI, PredicateId::ScWMVI, "W-MVI => Sc-W-MVI", convex);
    check_arrow(PredicateId::ScWMVI, PredicateId::WMVI, "Sc-W-MVI => W-MVI (extension, finite dim)",
                convex && extension && f.cone()->minty_compactness);
    if (extension) {
      check_arrow(PredicateId::WMin, PredicateId::WlMin, "W-Min => W-l-Min (extension)", true);
      check_arrow(PredicateId::WlMin, PredicateId::WMin, "W-l-Min => W-Min (extension)", true);
      check_arrow(PredicateId::WMin, PredicateId::ScWMin, "W-Min => Sc-W-Min (extension)", true);
    }

    rep.violations_total += static_cast<int>(cr.implication_violations.size());
    rep.candidates.push_back(std::move(cr));
  }
  return rep;
}

}  // namespace setopt
