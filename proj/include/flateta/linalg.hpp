// Exact linear algebra over Z and Q, plus a small pivoted elimination for
// floating types.
#ifndef FLATETA_LINALG_HPP_
#define FLATETA_LINALG_HPP_

#include <cmath>
#include <vector>

#include "core.hpp"

namespace flateta {

BigMatrix to_big(const IntMatrix& m);
RatMatrix to_rational(const IntMatrix& m);

// Fraction-free (Bareiss) elimination.
std::size_t rank(const BigMatrix& m);
std::size_t rank(const IntMatrix& m);
BigInt determinant(const BigMatrix& m);
Rational determinant(const RatMatrix& m);

RatMatrix inverse(const RatMatrix& m);

// Basis of the right kernel over Q, one vector per free column of the RREF.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);

// Scales a rational vector to the primitive integer vector on the same ray.
std::vector<BigInt> primitive_integer(const std::vector<Rational>& v);

struct SmithForm {
  BigMatrix U;  // rows x rows, unimodular
  BigMatrix D;  // rows x cols, diagonal with d1 | d2 | ...
  BigMatrix V;  // cols x cols, unimodular
  std::vector<BigInt> diagonal;  // min(rows, cols) entries, non-negative
};

// U * M * V = D.
SmithForm smith_normal_form(const BigMatrix& m);

// True when b lies in the Z-span of the columns of m.
bool in_column_lattice(const BigMatrix& m, const std::vector<BigInt>& b);

template<typename T>
T abs_value(const T& x) { return x < 0 ? T(-x) : x; }

// Gaussian elimination with partial pivoting; entries with magnitude below
// tol count as zero.  Returns a kernel basis.
template<typename T>
std::vector<std::vector<T>> numeric_nullspace(Matrix<T> a, const T& tol) {
  std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (abs_value(a(i, c)) > abs_value(a(best, c)))
        best = i;
    if (abs_value(a(best, c)) <= tol)
      continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a(r, j), a(best, j));
    T p = a(r, c);
    for (std::size_t j = c; j < cols; ++j)
      a(r, j) /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0)
        continue;
      T f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols)
    is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<T> v(cols, T(0));
    v[f] = T(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v[pivot_cols[k]] = -a(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template<typename T>
T numeric_determinant(Matrix<T> a) {
  std::size_t n = a.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (abs_value(a(i, c)) > abs_value(a(best, c)))
        best = i;
    if (a(best, c) == 0)
      return T(0);
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(c, j), a(best, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      T f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j)
        a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace flateta

#endif
