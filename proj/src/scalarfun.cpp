#include "setopt/scalarfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace setopt {

const char* to_string(TriState t) {
  switch (t) {
    case TriState::Holds: return "Holds";
    case TriState::Fails: return "Fails";
    default: return "Unknown";
  }
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int poly_degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

Rat ratfun_eval(const RatFun& f, const Rat& x) {
  Rat d = poly_eval(f.den, x);
  if (d == 0) throw std::domain_error("ratfun_eval: denominator vanishes");
  return poly_eval(f.num, x) / d;
}

ExtReal ratfun_limit_at_infinity(const RatFun& f) {
  int dn = poly_degree(f.num), dd = poly_degree(f.den);
  if (dd < 0) throw std::domain_error("ratfun_limit_at_infinity: zero denominator");
  if (dn < 0) return ExtReal(0);
  Rat lead = f.num[dn] / f.den[dd];
  if (dn < dd) return ExtReal(0);
  if (dn == dd) return ExtReal(lead);
  return lead > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
}

ExtReal PLFun::eval(const Rat& t) const {
  for (const auto& chunk : chunks) {
    if (chunk.empty()) continue;
    if (t < chunk.front().first || t > chunk.back().first) continue;
    for (std::size_t i = 0; i + 1 < chunk.size(); ++i) {
      if (t >= chunk[i].first && t <= chunk[i + 1].first) {
        Rat w = (t - chunk[i].first) / (chunk[i + 1].first - chunk[i].first);
        return ExtReal(Rat(chunk[i].second + w * (chunk[i + 1].second - chunk[i].second)));
      }
    }
    if (t == chunk.front().first) return ExtReal(chunk.front().second);
  }
  return ExtReal::pos_inf();
}

namespace {

DiniScalarResult dini_pl(const PLFun& f, const Rat& t0, int dir) {
  ExtReal v0 = f.eval(t0);
  if (v0.is_pos_inf()) return {ExtReal::neg_inf(), ExtReal::neg_inf(), true, 0};
  // Locate the chunk holding t0 and take the adjacent breakpoint in the
  // requested direction; no continuation means an immediate domain exit.
  for (const auto& chunk : f.chunks) {
    if (chunk.empty() || t0 < chunk.front().first || t0 > chunk.back().first) continue;
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      if (dir > 0) {
        if (i + 1 < chunk.size() && t0 >= chunk[i].first && t0 < chunk[i + 1].first) {
          Rat slope = (chunk[i + 1].second - chunk[i].second) / (chunk[i + 1].first - chunk[i].first);
          return {ExtReal(slope), ExtReal(slope), true, 0};
        }
      } else {
        if (i + 1 < chunk.size() && t0 > chunk[i].first && t0 <= chunk[i + 1].first) {
          Rat slope = (chunk[i].second - chunk[i + 1].second) / (chunk[i + 1].first - chunk[i].first);
          return {ExtReal(slope), ExtReal(slope), true, 0};
        }
      }
    }
    break;
  }
  return {ExtReal::pos_inf(), ExtReal::pos_inf(), true, 0};
}

DiniScalarResult dini_kseq(const KSeqFun& f, const Rat& t0, int dir) {
  if (t0 != 0 || dir <= 0)
    throw std::invalid_argument("scalar_dini: kseq profiles anchor at t0 = 0 from the right");
  if (f.phi_at_zero.is_pos_inf()) return {ExtReal::neg_inf(), ExtReal::neg_inf(), true, 0};
  if (f.phi_at_zero.is_neg_inf()) return {ExtReal::pos_inf(), ExtReal::pos_inf(), true, 0};
  const Rat& phi0 = f.phi_at_zero.finite_value();
  // Quotient q(k) = (phi(t_k) - phi0) / t_k as a rational function of k.  A
  // rational function is eventually monotone, so limsup = liminf = its limit
  // at infinity.
  RatFun q;
  Poly shifted = f.phi_of_k.num;
  shifted.resize(std::max(shifted.size(), f.phi_of_k.den.size()), Rat(0));
  for (std::size_t i = 0; i < f.phi_of_k.den.size(); ++i) shifted[i] -= phi0 * f.phi_of_k.den[i];
  // (shifted/phi.den) * (t.den/t.num)
  auto mul = [](const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return Poly{};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  q.num = mul(shifted, f.t_of_k.den);
  q.den = mul(f.phi_of_k.den, f.t_of_k.num);
  ExtReal lim = ratfun_limit_at_infinity(q);
  return {lim, lim, true, 0};
}

DiniScalarResult dini_samples(const SampleFun& f, const Rat& t0, int dir) {
  if (t0 != 0 || dir <= 0)
    throw std::invalid_argument("scalar_dini: sampled profiles anchor at t0 = 0 from the right");
  if (f.value_at_zero.is_pos_inf()) return {ExtReal::neg_inf(), ExtReal::neg_inf(), false, 0};
  std::vector<ExtReal> q;
  for (const auto& [t, v] : f.samples) {
    if (t <= 0) throw std::invalid_argument("scalar_dini: sample points must be positive");
    q.push_back(scale(Rat(1) / t, inf_residual(v, f.value_at_zero)));
  }
  if (q.empty()) return {ExtReal::pos_inf(), ExtReal::neg_inf(), false, 0};
  // Estimate from the last quarter of the sequence; report how long the
  // constant suffix is.
  std::size_t window = std::max<std::size_t>(2, q.size() / 4);
  window = std::min(window, q.size());
  ExtReal hi = ExtReal::neg_inf(), lo = ExtReal::pos_inf();
  for (std::size_t i = q.size() - window; i < q.size(); ++i) {
    hi = max(hi, q[i]);
    lo = min(lo, q[i]);
  }
  int stable = 1;
  for (std::size_t i = q.size() - 1; i > 0 && q[i - 1] == q.back(); --i) ++stable;
  return {hi, lo, false, stable};
}

}  // namespace

DiniScalarResult scalar_dini(const ScalarSegmentFn& f, const Rat& t0, int dir) {
  if (auto* pl = std::get_if<PLFun>(&f)) return dini_pl(*pl, t0, dir);
  if (auto* ks = std::get_if<KSeqFun>(&f)) return dini_kseq(*ks, t0, dir);
  return dini_samples(std::get<SampleFun>(f), t0, dir);
}

ExtReal scalar_eval(const ScalarSegmentFn& f, const Rat& t) {
  if (auto* pl = std::get_if<PLFun>(&f)) return pl->eval(t);
  if (auto* ks = std::get_if<KSeqFun>(&f)) {
    if (t == 0) return ks->phi_at_zero;
    for (long k = 1; k <= ks->display_n; ++k)
      if (ratfun_eval(ks->t_of_k, Rat(k)) == t) return ExtReal(ratfun_eval(ks->phi_of_k, Rat(k)));
    return ExtReal::pos_inf();
  }
  const auto& s = std::get<SampleFun>(f);
  if (t == 0) return s.value_at_zero;
  for (const auto& [tt, v] : s.samples)
    if (tt == t) return v;
  return ExtReal::pos_inf();
}

TriState check_lsc_at(const ScalarSegmentFn& f, const Rat& t0) {
  if (std::holds_alternative<PLFun>(f)) {
    // Finite PL pieces on closed chunks with +inf outside are l.s.c.
    // everywhere: the interpolant is continuous on each chunk and jumps
    // only upward (to +inf) across chunk boundaries.
    return TriState::Holds;
  }
  if (auto* ks = std::get_if<KSeqFun>(&f)) {
    if (t0 != 0) return TriState::Unknown;
    if (ks->phi_at_zero.is_neg_inf()) return TriState::Holds;
    RatFun q{ks->phi_of_k.num, ks->phi_of_k.den};
    ExtReal lim = ratfun_limit_at_infinity(q);
    return ks->phi_at_zero <= lim ? TriState::Holds : TriState::Fails;
  }
  return TriState::Unknown;
}

TriState check_convex(const ScalarSegmentFn& f) {
  auto* pl = std::get_if<PLFun>(&f);
  if (!pl) return TriState::Unknown;
  int nonempty = 0;
  for (const auto& c : pl->chunks) nonempty += !c.empty();
  if (nonempty == 0) return TriState::Holds;  // identically +inf
  if (nonempty > 1) return TriState::Fails;   // a gap breaks midpoint convexity
  const auto& c = *std::find_if(pl->chunks.begin(), pl->chunks.end(),
                                [](const auto& x) { return !x.empty(); });
  std::optional<Rat> prev;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Rat slope = (c[i + 1].second - c[i].second) / (c[i + 1].first - c[i].first);
    if (prev && slope < *prev) return TriState::Fails;
    prev = slope;
  }
  return TriState::Holds;
}

}  // namespace setopt
