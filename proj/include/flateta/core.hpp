// Numeric types, errors and a small dense matrix shared by all modules.
#ifndef FLATETA_CORE_HPP_
#define FLATETA_CORE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace flateta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::mpfr_float;

enum class ErrorCode {
  NotFiniteOrder,
  NotSignedPermutation,
  NotTwoPowerOrder,
  NotCyclotomicProduct,
  BadParity,
  PoleAtAngle,
  FixedRankNotOne,
  BadDimension,
  ResidualTooLarge,
  PoleAtOne,
  Unattainable,
  HypothesisViolated,
  NotTorsionFree,
  Overflow,
  InvalidSpec,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
      code_(code) {}
  ErrorCode code() const { return code_; }
private:
  ErrorCode code_;
};

template<typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool operator==(const Matrix& o) const = default;

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      v[i] = (*this)(i, j);
    return v;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  template<typename U>
  Matrix<U> cast() const {
    Matrix<U> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(i, j) = U((*this)(i, j));
    return m;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
using RealMatrix = Matrix<Real>;

// Overflow-checked int64 helpers.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix power(const IntMatrix& a, std::uint64_t e);
IntMatrix add_identity(const IntMatrix& a, std::int64_t scale);  // a + scale*I
IntMatrix block_diag(const std::vector<IntMatrix>& blocks);

template<typename T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& v) {
  std::vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[i] += a(i, j) * v[j];
  return out;
}

template<typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);
int sign_of(const Rational& q);

// 2-adic valuation and odd part; v must be nonzero.
int two_adic_valuation(BigInt v);
bool is_power_of_two(std::uint64_t v);
int log2_exact(std::uint64_t v);

// Extended precision setup.  Reads FLAT_ETA_PRECISION_BITS once (default 96)
// and installs it as the default mpfr precision.  Must run before any parallel
// region creates Real values; all numeric entry points call it.
unsigned ensure_precision();
Real real_pi();
Real to_real(const Rational& q);

}  // namespace flateta

#endif
