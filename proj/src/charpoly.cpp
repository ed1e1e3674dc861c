#include "flateta/charpoly.hpp"

#include <algorithm>

namespace flateta {

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial c;
  if (a.coeffs.empty() || b.coeffs.empty())
    return c;
  c.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return c;
}

bool poly_divide_exact(const IntPolynomial& p, const IntPolynomial& d, IntPolynomial& quotient) {
  if (!d.monic())
    throw Error(ErrorCode::InvalidSpec, "division by a non-monic polynomial");
  int dp = p.degree(), dd = d.degree();
  if (dp < dd)
    return false;
  std::vector<BigInt> rem = p.coeffs;
  std::vector<BigInt> q(dp - dd + 1, BigInt(0));
  for (int k = dp - dd; k >= 0; --k) {
    BigInt lead = rem[k + dd];
    q[k] = lead;
    if (lead == 0)
      continue;
    for (int t = 0; t <= dd; ++t)
      rem[k + t] -= lead * d.coeffs[t];
  }
  for (int t = 0; t < dd; ++t)
    if (rem[t] != 0)
      return false;
  quotient.coeffs = std::move(q);
  return true;
}

std::string to_string(const IntPolynomial& p) {
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coeffs[k];
    if (c == 0)
      continue;
    BigInt a = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (a != 1 || k == 0)
      s += a.str();
    if (k >= 1)
      s += "x";
    if (k >= 2)
      s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

IntPolynomial cyclotomic_two_power(std::uint64_t d) {
  IntPolynomial p;
  if (d == 1) {
    p.coeffs = {BigInt(-1), BigInt(1)};
    return p;
  }
  if (!is_power_of_two(d))
    throw Error(ErrorCode::InvalidSpec, "cyclotomic index is not a power of two");
  std::size_t half = d / 2;
  p.coeffs.assign(half + 1, BigInt(0));
  p.coeffs[0] = 1;
  p.coeffs[half] = 1;
  return p;
}

int CyclotomicFactorization::c(std::uint64_t d) const {
  auto it = exponents.find(d);
  return it == exponents.end() ? 0 : it->second;
}

int CyclotomicFactorization::factor_count() const {
  int f = 0;
  for (const auto& [d, e] : exponents)
    f += e;
  return f;
}

IntPolynomial CyclotomicFactorization::expand() const {
  IntPolynomial p;
  p.coeffs = {BigInt(1)};
  for (const auto& [d, e] : exponents)
    for (int k = 0; k < e; ++k)
      p = poly_mul(p, cyclotomic_two_power(d));
  return p;
}

namespace {

template<typename T>
struct Arith;

template<>
struct Arith<std::int64_t> {
  static std::int64_t add(std::int64_t a, std::int64_t b) { return checked_add(a, b); }
  static std::int64_t mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
};

template<>
struct Arith<BigInt> {
  static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
};

// Coefficients of det(xI - A), descending degree.  Peels off the leading row
// and column at each step and multiplies by a lower-triangular Toeplitz
// matrix.
template<typename T>
std::vector<T> berkowitz(const Matrix<T>& a) {
  using Op = Arith<T>;
  std::size_t n = a.rows();
  if (n == 0)
    return {T(1)};
  std::vector<T> p = {T(1), T(-a(n - 1, n - 1))};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::size_t s = n - k - 1;  // size of the trailing block
    std::vector<T> q(s + 2, T(0));
    q[0] = T(1);
    q[1] = T(-a(k, k));
    std::vector<T> v(s);
    for (std::size_t i = 0; i < s; ++i)
      v[i] = a(k + 1 + i, k);
    for (std::size_t j = 0; j < s; ++j) {
      // q[j + 2] = -R * A1^j * C
      T dot(0);
      for (std::size_t i = 0; i < s; ++i)
        if (a(k, k + 1 + i) != 0 && v[i] != 0)
          dot = Op::add(dot, Op::mul(a(k, k + 1 + i), v[i]));
      q[j + 2] = T(-dot);
      if (j + 1 < s) {
        std::vector<T> w(s, T(0));
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t t = 0; t < s; ++t)
            if (a(k + 1 + i, k + 1 + t) != 0 && v[t] != 0)
              w[i] = Op::add(w[i], Op::mul(a(k + 1 + i, k + 1 + t), v[t]));
        v = std::move(w);
      }
    }
    std::vector<T> next(s + 2, T(0));
    for (std::size_t i = 0; i < s + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, s); ++j)
        if (q[i - j] != 0 && p[j] != 0)
          next[i] = Op::add(next[i], Op::mul(q[i - j], p[j]));
    p = std::move(next);
  }
  return p;
}

}  // namespace

IntPolynomial char_poly(const IntMatrix& b) {
  if (!b.is_square())
    throw Error(ErrorCode::InvalidSpec, "characteristic polynomial of non-square matrix");
  IntPolynomial p;
  try {
    std::vector<std::int64_t> desc = berkowitz(b);
    for (auto it = desc.rbegin(); it != desc.rend(); ++it)
      p.coeffs.emplace_back(*it);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow)
      throw;
    std::vector<BigInt> desc = berkowitz(b.cast<BigInt>());
    p.coeffs.assign(desc.rbegin(), desc.rend());
  }
  return p;
}

CyclotomicFactorization cyclotomic_factor(const IntPolynomial& p) {
  if (!p.monic())
    throw Error(ErrorCode::NotCyclotomicProduct, "polynomial is not monic");
  CyclotomicFactorization f;
  IntPolynomial rest = p;
  int kmax = 1;
  while ((std::int64_t(1) << kmax) <= rest.degree())
    ++kmax;
  for (int k = kmax; k >= 0; --k) {
    std::uint64_t d = std::uint64_t(1) << k;
    IntPolynomial phi = cyclotomic_two_power(d);
    IntPolynomial q;
    while (rest.degree() >= phi.degree() && poly_divide_exact(rest, phi, q)) {
      rest = q;
      ++f.exponents[d];
    }
  }
  if (rest.degree() != 0 || rest.coeffs[0] != 1)
    throw Error(ErrorCode::NotCyclotomicProduct,
                "remaining factor " + to_string(rest) + " is not a 2-power cyclotomic product");
  for (const auto& [d, e] : f.exponents)
    if (d > 1)
      f.r = std::max(f.r, log2_exact(d));
  return f;
}

int f_of_B(const IntMatrix& b) {
  return cyclotomic_factor(char_poly(b)).factor_count();
}

}  // namespace flateta
