#pragma once

#include <vector>

#include "setopt/rational.hpp"

namespace setopt {

// Dense exact-rational vectors and matrices, sized for dimensions <= 4.
using Vec = std::vector<Rat>;
using Matrix = std::vector<Vec>;

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale_vec(const Rat& t, const Vec& a);
Vec neg(const Vec& a);
bool is_zero(const Vec& a);
Vec zero_vec(int dim);
Vec unit_vec(int dim, int i);

// Lexicographic comparison, the tie-breaker used for all canonical orderings.
bool lex_less(const Vec& a, const Vec& b);

// Scales a nonzero vector by the unique positive factor giving coprime
// integer entries.  Rays and constraint normals are stored in this form.
Vec primitive(const Vec& a);

// Reduces m in place to reduced row echelon form; returns the pivot columns.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

// Basis of {x | m x = 0}, in RREF-derived canonical order.
std::vector<Vec> nullspace(const Matrix& m, int dim);

std::string vec_to_string(const Vec& v);

}  // namespace setopt
