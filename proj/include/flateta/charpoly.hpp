// Characteristic polynomials over Z and their factorisation into 2-power
// cyclotomic polynomials.
#ifndef FLATETA_CHARPOLY_HPP_
#define FLATETA_CHARPOLY_HPP_

#include <map>
#include <string>
#include <vector>

#include "core.hpp"

namespace flateta {

// Coefficients in ascending degree.
struct IntPolynomial {
  std::vector<BigInt> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
// Exact division by a monic divisor; returns false when a remainder is left.
bool poly_divide_exact(const IntPolynomial& p, const IntPolynomial& d, IntPolynomial& quotient);
std::string to_string(const IntPolynomial& p);

// Phi_d for d = 1 or d = 2^k.
IntPolynomial cyclotomic_two_power(std::uint64_t d);

struct CyclotomicFactorization {
  std::map<std::uint64_t, int> exponents;  // d -> c_d, only d with c_d > 0
  int r = 0;                               // largest k with 2^k dividing some d present

  int c(std::uint64_t d) const;
  int factor_count() const;  // sum of c_d
  IntPolynomial expand() const;
};

// Division-free (Berkowitz) characteristic polynomial det(xI - B).
IntPolynomial char_poly(const IntMatrix& b);
CyclotomicFactorization cyclotomic_factor(const IntPolynomial& p);
int f_of_B(const IntMatrix& b);

}  // namespace flateta

#endif
