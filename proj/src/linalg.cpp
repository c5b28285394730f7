#include "setopt/linalg.hpp"

#include <stdexcept>

namespace setopt {

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale_vec(const Rat& t, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

Vec neg(const Vec& a) { return scale_vec(-1, a); }

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Vec zero_vec(int dim) { return Vec(dim, Rat(0)); }

Vec unit_vec(int dim, int i) {
  Vec v(dim, Rat(0));
  v[i] = 1;
  return v;
}

bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

Vec primitive(const Vec& a) {
  mpz_class den_lcm = 1;
  for (const auto& x : a) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& x : a) {
    mpz_class n = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return a;  // zero vector
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = Rat(a[i].get_num() * (den_lcm / a[i].get_den()) / num_gcd);
    r[i].canonicalize();
  }
  return r;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> nullspace(const Matrix& m, int dim) {
  Matrix a = m;
  for (auto& row : a)
    if (static_cast<int>(row.size()) != dim) throw std::invalid_argument("nullspace: bad row size");
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(dim);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (i < a.size()) v[pivots[i]] = -a[i][free];
    }
    basis.push_back(v);
  }
  return basis;
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace setopt
