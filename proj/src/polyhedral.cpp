#include "setopt/polyhedral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace setopt {

HRep HRep::empty(int dim) { return HRep{dim, {Halfspace{zero_vec(dim), Rat(-1)}}}; }

bool HRep::is_empty_canonical() const {
  return constraints.size() == 1 && is_zero(constraints[0].normal) && constraints[0].offset < 0;
}

VRep VRep::full(int dim) {
  VRep v{dim, {zero_vec(dim)}, {}};
  for (int i = 0; i < dim; ++i) {
    v.rays.push_back(unit_vec(dim, i));
    v.rays.push_back(neg(unit_vec(dim, i)));
  }
  return v;
}

namespace {

void sort_dedup(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Enumerates size-k subsets of {0..n-1}, calling f on each.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ConeGens extreme_rays(const std::vector<Vec>& rows_in, int dim) {
  std::vector<Vec> rows;
  for (const auto& r : rows_in) {
    if (static_cast<int>(r.size()) != dim) throw std::invalid_argument("extreme_rays: bad row");
    if (!is_zero(r)) rows.push_back(primitive(r));
  }
  sort_dedup(rows);

  ConeGens out;
  std::vector<Vec> null_basis = nullspace(rows, dim);
  for (auto& l : null_basis) out.lines.push_back(primitive(l));
  const int rho = dim - static_cast<int>(null_basis.size());
  if (rho == 0) return out;  // the cone is a subspace

  // Extreme rays of the pointed part: each comes from a rank-(rho-1) subset
  // of rows, solved together with the lineality equations.
  std::set<std::vector<std::string>> seen;
  const int m = static_cast<int>(rows.size());
  for_each_subset(m, rho - 1, [&](const std::vector<int>& idx) {
    Matrix sys;
    for (int i : idx) sys.push_back(rows[i]);
    if (rank(sys) != rho - 1) return;
    for (const auto& l : out.lines) sys.push_back(l);
    std::vector<Vec> ns = nullspace(sys, dim);
    if (ns.size() != 1) return;
    Vec v = primitive(ns[0]);
    bool ok_pos = true, ok_neg = true;
    for (const auto& r : rows) {
      Rat d = dot(r, v);
      if (d > 0) ok_pos = false;
      if (d < 0) ok_neg = false;
      if (!ok_pos && !ok_neg) return;
    }
    if (!ok_pos) v = neg(v);
    std::vector<std::string> key;
    key.reserve(v.size());
    for (const auto& x : v) key.push_back(x.get_str());
    if (seen.insert(key).second) out.rays.push_back(v);
  });
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  return out;
}

VRep h_to_v(const HRep& h) {
  const int d = h.dim;
  // Homogenize: {(z,w) | Az - cw <= 0, -w <= 0}.
  std::vector<Vec> rows;
  for (const auto& c : h.constraints) {
    Vec r = c.normal;
    r.push_back(-c.offset);
    rows.push_back(r);
  }
  Vec wrow = zero_vec(d + 1);
  wrow[d] = -1;
  rows.push_back(wrow);

  ConeGens g = extreme_rays(rows, d + 1);
  VRep out{d, {}, {}};
  for (const auto& v : g.rays) {
    Vec z(v.begin(), v.begin() + d);
    if (v[d] > 0) {
      Rat inv = 1 / v[d];
      out.vertices.push_back(scale_vec(inv, z));
    } else {
      out.rays.push_back(primitive(z));
    }
  }
  for (const auto& l : g.lines) {
    // Lineality satisfies w = 0: each line of the polyhedron enters as a
    // +-pair of rays.
    Vec z(l.begin(), l.begin() + d);
    out.rays.push_back(primitive(z));
    out.rays.push_back(primitive(neg(z)));
  }
  if (out.vertices.empty()) return VRep::empty(d);
  sort_dedup(out.vertices);
  sort_dedup(out.rays);
  return out;
}

HRep v_to_h(const VRep& v) {
  const int d = v.dim;
  if (v.is_empty()) return HRep::empty(d);
  // Facet cone: {y = (a,b) | <a,p> + b <= 0 for vertices p, <a,r> <= 0 for
  // rays r}; a facet a.z <= -b per extreme ray, an equality pair per line.
  std::vector<Vec> rows;
  for (const auto& p : v.vertices) {
    Vec r = p;
    r.push_back(Rat(1));
    rows.push_back(r);
  }
  for (const auto& ray : v.rays) {
    Vec r = ray;
    r.push_back(Rat(0));
    rows.push_back(r);
  }
  ConeGens g = extreme_rays(rows, d + 1);
  HRep out{d, {}};
  auto emit = [&](const Vec& y) {
    Vec a(y.begin(), y.begin() + d);
    if (is_zero(a)) return;  // trivial constraint 0 <= |b|
    Halfspace hs{a, Rat(-y[d])};
    Vec joint = a;
    joint.push_back(hs.offset);
    joint = primitive(joint);
    hs.normal.assign(joint.begin(), joint.begin() + d);
    hs.offset = joint[d];
    out.constraints.push_back(hs);
  };
  for (const auto& y : g.rays) emit(y);
  for (const auto& l : g.lines) {
    emit(l);
    emit(neg(l));
  }
  std::sort(out.constraints.begin(), out.constraints.end(), [](const Halfspace& x, const Halfspace& y) {
    Vec a = x.normal, b = y.normal;
    a.push_back(x.offset);
    b.push_back(y.offset);
    return lex_less(a, b);
  });
  out.constraints.erase(std::unique(out.constraints.begin(), out.constraints.end(),
                                    [](const Halfspace& x, const Halfspace& y) {
                                      return x.normal == y.normal && x.offset == y.offset;
                                    }),
                        out.constraints.end());
  return out;
}

VRep canonicalize(const VRep& v) { return h_to_v(v_to_h(v)); }

HRep canonicalize(const HRep& h) { return v_to_h(h_to_v(h)); }

VRep minkowski_sum(const VRep& a, const VRep& b) {
  if (a.dim != b.dim) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  if (a.is_empty() || b.is_empty()) return VRep::empty(a.dim);
  VRep raw{a.dim, {}, {}};
  for (const auto& p : a.vertices)
    for (const auto& q : b.vertices) raw.vertices.push_back(add(p, q));
  raw.rays = a.rays;
  raw.rays.insert(raw.rays.end(), b.rays.begin(), b.rays.end());
  return canonicalize(raw);
}

HRep intersect(const HRep& a, const HRep& b) {
  if (a.dim != b.dim) throw std::invalid_argument("intersect: dimension mismatch");
  HRep raw{a.dim, a.constraints};
  raw.constraints.insert(raw.constraints.end(), b.constraints.begin(), b.constraints.end());
  return canonicalize(raw);
}

ExtReal support(const DualVector& zstar, const VRep& p) {
  if (p.is_empty()) return ExtReal::neg_inf();
  for (const auto& r : p.rays)
    if (dot(zstar, r) > 0) return ExtReal::pos_inf();
  ExtReal best = ExtReal::neg_inf();
  for (const auto& v : p.vertices) best = max(best, ExtReal(dot(zstar, v)));
  return best;
}

bool contains_point(const HRep& p, const Point& z) {
  for (const auto& c : p.constraints)
    if (dot(c.normal, z) > c.offset) return false;
  return true;
}

bool subset(const VRep& a, const HRep& b) {
  for (const auto& v : a.vertices)
    if (!contains_point(b, v)) return false;
  for (const auto& r : a.rays)
    for (const auto& c : b.constraints)
      if (dot(c.normal, r) > 0) return false;
  return true;
}

bool strict_subset(const VRep& a, const HRep& b) {
  for (const auto& v : a.vertices)
    for (const auto& c : b.constraints)
      if (dot(c.normal, v) >= c.offset) return false;
  for (const auto& r : a.rays)
    for (const auto& c : b.constraints)
      if (dot(c.normal, r) > 0) return false;
  return true;
}

bool same_set(const VRep& a, const VRep& b) {
  return subset(a, v_to_h(b)) && subset(b, v_to_h(a));
}

std::string to_string(const HRep& h) {
  if (h.constraints.empty()) return "{full}";
  std::string s = "{";
  for (std::size_t i = 0; i < h.constraints.size(); ++i) {
    if (i) s += ", ";
    s += vec_to_string(h.constraints[i].normal) + ".z <= " + rat_to_string(h.constraints[i].offset);
  }
  return s + "}";
}

std::string to_string(const VRep& v) {
  if (v.is_empty()) return "{empty}";
  std::string s = "conv{";
  for (std::size_t i = 0; i < v.vertices.size(); ++i) {
    if (i) s += ", ";
    s += vec_to_string(v.vertices[i]);
  }
  s += "}";
  if (!v.rays.empty()) {
    s += " + cone{";
    for (std::size_t i = 0; i < v.rays.size(); ++i) {
      if (i) s += ", ";
      s += vec_to_string(v.rays[i]);
    }
    s += "}";
  }
  return s;
}

}  // namespace setopt
