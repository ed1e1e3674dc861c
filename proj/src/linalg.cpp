#include "flateta/linalg.hpp"

#include <algorithm>
#include <utility>

namespace flateta {

BigMatrix to_big(const IntMatrix& m) {
  return m.cast<BigInt>();
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = Rational(m(i, j));
  return r;
}

namespace {

// Bareiss elimination in place; returns rank and tracks the sign of row swaps.
std::size_t bareiss(BigMatrix& a, int& sign) {
  std::size_t rows = a.rows(), cols = a.cols();
  sign = 1;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a(r, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

}  // namespace

// Integer row elimination that skips zero entries and divides each updated row
// by its content; exact, and cheap on the sparse matrices built from B^k.
std::size_t rank(const BigMatrix& m) {
  BigMatrix a = m;
  std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a(r, j), a(p, j));
    support.clear();
    for (std::size_t j = c + 1; j < cols; ++j)
      if (a(r, j) != 0)
        support.push_back(j);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0)
        continue;
      BigInt f = a(i, c), g = a(r, c);
      BigInt content = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a(i, j) != 0)
          a(i, j) *= g;
      }
      for (std::size_t j : support)
        a(i, j) -= f * a(r, j);
      a(i, c) = 0;
      for (std::size_t j = c + 1; j < cols; ++j)
        if (a(i, j) != 0)
          content = gcd(content, a(i, j));
      if (content > 1)
        for (std::size_t j = c + 1; j < cols; ++j)
          if (a(i, j) != 0)
            a(i, j) /= content;
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& m) {
  return rank(to_big(m));
}

BigInt determinant(const BigMatrix& m) {
  if (!m.is_square())
    throw Error(ErrorCode::InvalidSpec, "determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0)
    return 1;
  BigMatrix a = m;
  int sign;
  // A rank-deficient matrix leaves a zero pivot somewhere on the diagonal.
  if (bareiss(a, sign) < n)
    return 0;
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(c, j), a(p, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0)
        continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j)
        a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0)
      ++p;
    if (p == n)
      throw Error(ErrorCode::InvalidSpec, "singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(p, j));
        std::swap(inv(c, j), inv(p, j));
      }
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0)
        continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0)
      ++p;
    if (p == rows)
      continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a(r, j), a(p, j));
    Rational piv = a(r, c);
    for (std::size_t j = c; j < cols; ++j)
      a(r, j) /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0)
        continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots)
    is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -a(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BigInt> primitive_integer(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const Rational& q : v)
    l = boost::multiprecision::lcm(l, denominator(q));
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const Rational& q : v) {
    BigInt x = numerator(q) * (l / denominator(q));
    g = boost::multiprecision::gcd(g, x);
    out.push_back(x);
  }
  if (g == 0)
    throw Error(ErrorCode::InvalidSpec, "primitive vector of zero");
  for (BigInt& x : out)
    x /= abs(g);
  return out;
}

namespace {

void swap_rows(BigMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    std::swap(a(i, c), a(j, c));
}

void swap_cols(BigMatrix& a, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    std::swap(a(r, i), a(r, j));
}

// row_i -= q * row_j
void row_axpy(BigMatrix& a, std::size_t i, std::size_t j, const BigInt& q) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (a(j, c) != 0)
      a(i, c) -= q * a(j, c);
}

void col_axpy(BigMatrix& a, std::size_t i, std::size_t j, const BigInt& q) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a(r, j) != 0)
      a(r, i) -= q * a(r, j);
}

}  // namespace

SmithForm smith_normal_form(const BigMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  SmithForm sf;
  sf.D = m;
  sf.U = BigMatrix::identity(rows);
  sf.V = BigMatrix::identity(cols);
  BigMatrix& d = sf.D;
  std::size_t lim = std::min(rows, cols);
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      // Pivot of least magnitude keeps entry growth down.
      bool found = false;
      std::size_t pr = t, pc = t;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (!found || abs(d(i, j)) < best)) {
            found = true;
            best = abs(d(i, j));
            pr = i;
            pc = j;
          }
      if (!found)
        break;
      if (pr != t) {
        swap_rows(d, t, pr);
        swap_rows(sf.U, t, pr);
      }
      if (pc != t) {
        swap_cols(d, t, pc);
        swap_cols(sf.V, t, pc);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0)
          continue;
        BigInt q = d(i, t) / d(t, t);
        row_axpy(d, i, t, q);
        row_axpy(sf.U, i, t, q);
        if (d(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0)
          continue;
        BigInt q = d(t, j) / d(t, t);
        col_axpy(d, j, t, q);
        col_axpy(sf.V, j, t, q);
        if (d(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_axpy(d, t, i, BigInt(-1));
            row_axpy(sf.U, t, i, BigInt(-1));
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c)
        d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c)
        sf.U(t, c) = -sf.U(t, c);
    }
  }
  for (std::size_t t = 0; t < lim; ++t)
    sf.diagonal.push_back(d(t, t));
  return sf;
}

bool in_column_lattice(const BigMatrix& m, const std::vector<BigInt>& b) {
  SmithForm sf = smith_normal_form(m);
  // M x = b  <=>  D y = U b  with  x = V y.
  std::vector<BigInt> ub = mat_vec(sf.U, b);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    BigInt di = i < sf.diagonal.size() ? sf.diagonal[i] : BigInt(0);
    if (di == 0) {
      if (ub[i] != 0)
        return false;
    } else if (ub[i] % di != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace flateta
