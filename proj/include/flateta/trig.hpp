// Trigonometric and floor-sum identities at angles k*pi/2^r, evaluated in
// extended precision.
#ifndef FLATETA_TRIG_HPP_
#define FLATETA_TRIG_HPP_

#include <string>
#include <vector>

#include "core.hpp"

namespace flateta {

// sin, cos and cot of pi*q.  The rational argument is reduced modulo 2
// before conversion.  cot_pi throws PoleAtAngle when q is an integer.
Real sin_pi(const Rational& q);
Real cos_pi(const Rational& q);
Real cot_pi(const Rational& q);
// Real-argument cotangent (radians) with the same pole guard (1e-12).
Real cot_real(const Real& x);

std::int64_t floor_sum_star(std::int64_t N, std::int64_t k);

Real sine_product(int r, std::int64_t k);
Real half_sine_product(int r);
Real alt_sine_sum(int r, int t, std::int64_t omega);
Real cot_product(int r, std::int64_t k);
Real alt_cot_sum(int r, std::int64_t N, std::int64_t ell);

// Closed forms the identities assert.
Rational sine_product_closed(int r);      // 2^-(2^(r-1)-1)
Real half_sine_product_closed(int r);     // sqrt(2) / 2^(2^(r-2))
std::int64_t alt_sine_sum_closed(int r, int t, std::int64_t omega);
std::int64_t alt_cot_sum_closed(std::int64_t N, std::int64_t ell);
int cot_product_closed(int r, std::int64_t k);  // 1 for r >= 3, (-1)^[k/2] for r = 2

struct IdentityCheck {
  std::string identity;
  std::string params;
  double value = 0;
  double expected = 0;
  double error = 0;
  double tolerance = 0;
  bool ok = false;
};

struct IdentitySuiteOptions {
  int max_r = 8;
  std::int64_t floor_max_N = 1024;
  std::int64_t floor_max_k = 99;
  int k_independence_max_r = 6;
  int max_ell = 15;
  double tolerance = 1e-9;
  double k_independence_tolerance = 1e-12;
};

// Every identity over its parameter grid, in a fixed order.  The parallel
// flag distributes checks over OpenMP threads; results are identical.
std::vector<IdentityCheck> identity_suite(const IdentitySuiteOptions& opt, bool parallel);

}  // namespace flateta

#endif
