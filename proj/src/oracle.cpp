#include "setopt/oracle.hpp"

#include <stdexcept>

namespace setopt {

std::vector<Point> weak_efficient_bruteforce(const PLComplex& psi, const ConeSpec& cone,
                                             const std::vector<Point>& X) {
  std::vector<std::optional<Point>> vals;
  vals.reserve(X.size());
  for (const auto& x : X) vals.push_back(psi.eval(x));
  std::vector<Point> out;
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (!vals[i]) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < X.size() && !dominated; ++j) {
      if (i == j || !vals[j]) continue;
      Point d = sub(*vals[i], *vals[j]);
      bool in_int = true;
      for (const auto& m : cone.dual_base) in_int = in_int && dot(m, d) < 0;
      dominated = in_int;
    }
    if (!dominated) out.push_back(X[i]);
  }
  return out;
}

ResidualCheck residual_bruteforce(const GSet& a, const GSet& b, const std::vector<Point>& probes) {
  GSet res = residual(a, b);
  ResidualCheck rep;
  for (const auto& z : probes) {
    ++rep.probes;
    bool by_definition;
    if (b.is_empty()) {
      by_definition = true;  // emptyset + {z} = emptyset is inside anything
    } else if (a.is_full()) {
      by_definition = true;
    } else if (a.is_empty() || b.is_full()) {
      by_definition = false;
    } else {
      VRep shifted = b.vrep();
      for (auto& v : shifted.vertices) v = add(v, z);
      by_definition = subset(shifted, a.hrep());
    }
    if (by_definition != set_contains(res, z)) ++rep.disagreements;
  }
  return rep;
}

namespace {

DiniScalarResult oracle_pl(const PLFun& f, int density) {
  ExtReal v0 = f.eval(Rat(0));
  if (v0.is_pos_inf()) return {ExtReal::neg_inf(), ExtReal::neg_inf(), true, 0};
  // Dense quotient scan on t = base/j; PL quotients are exactly constant
  // once inside the first piece, which the scan certifies.
  Rat base(1, 2);
  std::vector<ExtReal> qs;
  for (int j = 1; j <= 8 * density; ++j) {
    Rat t = base / j;
    qs.push_back(scale(1 / t, inf_residual(f.eval(t), v0)));
  }
  int run = 1;
  for (std::size_t i = qs.size() - 1; i > 0 && qs[i - 1] == qs.back(); --i) ++run;
  if (run >= 2 * density) return {qs.back(), qs.back(), true, run};
  ExtReal hi = ExtReal::neg_inf(), lo = ExtReal::pos_inf();
  for (std::size_t i = qs.size() - density; i < qs.size(); ++i) {
    hi = max(hi, qs[i]);
    lo = min(lo, qs[i]);
  }
  return {hi, lo, false, run};
}

// Cauchy interpolation: reconstruct q(k) = p(k)/r(k) with deg <= dmax from
// exact samples, then read the limit off the leading coefficients.
DiniScalarResult oracle_kseq(const KSeqFun& f, int density) {
  if (f.phi_at_zero.is_pos_inf()) return {ExtReal::neg_inf(), ExtReal::neg_inf(), true, 0};
  if (f.phi_at_zero.is_neg_inf()) return {ExtReal::pos_inf(), ExtReal::pos_inf(), true, 0};
  const Rat phi0 = f.phi_at_zero.finite_value();
  const int dmax = static_cast<int>(std::max({f.t_of_k.num.size(), f.t_of_k.den.size(),
                                              f.phi_of_k.num.size(), f.phi_of_k.den.size()})) +
                   1;
  const int ncoef = 2 * (dmax + 1);
  // Sample quotients on the dense grid; collect enough distinct k.
  std::vector<std::pair<Rat, Rat>> samples;  // (k, q(k))
  for (long k = 1; k <= 10L * density * dmax && static_cast<int>(samples.size()) < ncoef + dmax; ++k) {
    Rat kk(k);
    if (poly_eval(f.t_of_k.den, kk) == 0 || poly_eval(f.phi_of_k.den, kk) == 0) continue;
    Rat t = ratfun_eval(f.t_of_k, kk);
    if (t <= 0) continue;
    Rat q = (ratfun_eval(f.phi_of_k, kk) - phi0) / t;
    samples.emplace_back(kk, q);
  }
  if (static_cast<int>(samples.size()) < ncoef) throw std::domain_error("derivative_oracle: too few samples");
  // Homogeneous system p(k) - q*r(k) = 0 in the 2(dmax+1) coefficients.
  Matrix sys;
  for (int s = 0; s < ncoef; ++s) {
    const auto& [k, q] = samples[s];
    Vec row;
    Rat kp = 1;
    for (int i = 0; i <= dmax; ++i) {
      row.push_back(kp);
      kp *= k;
    }
    kp = 1;
    for (int i = 0; i <= dmax; ++i) {
      row.push_back(-q * kp);
      kp *= k;
    }
    sys.push_back(row);
  }
  std::vector<Vec> ns = nullspace(sys, ncoef);
  if (ns.empty()) throw std::logic_error("derivative_oracle: reconstruction failed");
  for (const auto& cand : ns) {
    Poly p(cand.begin(), cand.begin() + dmax + 1);
    Poly r(cand.begin() + dmax + 1, cand.end());
    if (poly_degree(r) < 0) continue;
    bool ok = true;
    for (const auto& [k, q] : samples) {
      Rat rv = poly_eval(r, k);
      if (rv == 0 || poly_eval(p, k) != q * rv) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    int dp = poly_degree(p), dr = poly_degree(r);
    ExtReal lim;
    if (dp < 0) {
      lim = ExtReal(0);
    } else if (dp < dr) {
      lim = ExtReal(0);
    } else if (dp == dr) {
      lim = ExtReal(Rat(p[dp] / r[dr]));
    } else {
      lim = (p[dp] / r[dr] > 0) ? ExtReal::pos_inf() : ExtReal::neg_inf();
    }
    return {lim, lim, true, static_cast<int>(samples.size())};
  }
  throw std::logic_error("derivative_oracle: no consistent reconstruction");
}

}  // namespace

DiniScalarResult derivative_oracle(const ScalarSegmentFn& f, int density) {
  if (auto* pl = std::get_if<PLFun>(&f)) return oracle_pl(*pl, density);
  if (auto* ks = std::get_if<KSeqFun>(&f)) return oracle_kseq(*ks, density);
  throw std::invalid_argument("derivative_oracle: needs a closed-form profile");
}

}  // namespace setopt
