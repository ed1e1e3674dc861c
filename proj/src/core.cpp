#include "flateta/core.hpp"

#include <cmath>
#include <cstdlib>

namespace flateta {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorCode::NotSignedPermutation: return "NotSignedPermutation";
    case ErrorCode::NotTwoPowerOrder: return "NotTwoPowerOrder";
    case ErrorCode::NotCyclotomicProduct: return "NotCyclotomicProduct";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::PoleAtAngle: return "PoleAtAngle";
    case ErrorCode::FixedRankNotOne: return "FixedRankNotOne";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::Unattainable: return "Unattainable";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotTorsionFree: return "NotTorsionFree";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "int64 addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "int64 multiplication overflow");
  return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::InvalidSpec, "matrix size mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::int64_t aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0)
          c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
    }
  return c;
}

IntMatrix power(const IntMatrix& a, std::uint64_t e) {
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (e) {
    if (e & 1)
      result = multiply(result, base);
    e >>= 1;
    if (e)
      base = multiply(base, base);
  }
  return result;
}

IntMatrix add_identity(const IntMatrix& a, std::int64_t scale) {
  IntMatrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    m(i, i) = checked_add(m(i, i), scale);
  return m;
}

IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const IntMatrix& b : blocks)
    n += b.rows();
  IntMatrix m(n, n);
  std::size_t off = 0;
  for (const IntMatrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1)
    return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos)
      return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0)
      throw Error(ErrorCode::InvalidSpec, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e))
      throw;
    throw Error(ErrorCode::InvalidSpec, "cannot parse rational '" + s + "'");
  }
}

int sign_of(const Rational& q) {
  return q > 0 ? 1 : (q < 0 ? -1 : 0);
}

int two_adic_valuation(BigInt v) {
  if (v == 0)
    throw Error(ErrorCode::InvalidSpec, "2-adic valuation of zero");
  int nu = 0;
  while ((v & 1) == 0) {
    v >>= 1;
    ++nu;
  }
  return nu;
}

bool is_power_of_two(std::uint64_t v) {
  return v != 0 && (v & (v - 1)) == 0;
}

int log2_exact(std::uint64_t v) {
  int k = 0;
  while (v > 1) {
    v >>= 1;
    ++k;
  }
  return k;
}

unsigned ensure_precision() {
  static const unsigned bits = [] {
    unsigned b = 96;
    if (const char* env = std::getenv("FLAT_ETA_PRECISION_BITS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 53 && v <= 4096)
        b = static_cast<unsigned>(v);
    }
    return b;
  }();
  // The default precision is per thread, so each OpenMP worker sets it too.
  thread_local bool applied = false;
  if (!applied) {
    Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1);
    applied = true;
  }
  return bits;
}

Real real_pi() {
  ensure_precision();
  Real x;
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

Real to_real(const Rational& q) {
  ensure_precision();
  Real num(numerator(q).str());
  Real den(denominator(q).str());
  return num / den;
}

}  // namespace flateta
