#include "flateta/trig.hpp"

#include <functional>

namespace flateta {

namespace {

// q reduced into [0, 2).
Rational reduce_mod2(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt period = 2 * den;
  num %= period;
  if (num < 0)
    num += period;
  return Rational(num, den);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

bool is_half_odd(const Rational& q) { return denominator(q) == 2; }

void require_odd(std::int64_t k, const char* what) {
  if (k % 2 == 0)
    throw Error(ErrorCode::BadParity, std::string(what) + " must be odd");
}

double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace

Real sin_pi(const Rational& q) {
  ensure_precision();
  Rational x = reduce_mod2(q);
  if (is_integer(x))
    return Real(0);
  if (is_half_odd(x))
    return Real(x < 1 ? 1 : -1);
  return sin(real_pi() * to_real(x));
}

Real cos_pi(const Rational& q) {
  ensure_precision();
  Rational x = reduce_mod2(q);
  if (is_half_odd(x))
    return Real(0);
  if (is_integer(x))
    return Real(x == 0 ? 1 : -1);
  return cos(real_pi() * to_real(x));
}

Real cot_pi(const Rational& q) {
  ensure_precision();
  Rational x = reduce_mod2(q);
  if (is_integer(x))
    throw Error(ErrorCode::PoleAtAngle, "cot at a multiple of pi (" + to_string(q) + " pi)");
  if (is_half_odd(x))
    return Real(0);
  Real a = real_pi() * to_real(x);
  return cos(a) / sin(a);
}

Real cot_real(const Real& x) {
  Real pi = real_pi();
  Real k = round(x / pi);
  if (abs(x - k * pi) < Real(1e-12))
    throw Error(ErrorCode::PoleAtAngle, "cot argument within 1e-12 of a multiple of pi");
  return cos(x) / sin(x);
}

std::int64_t floor_sum_star(std::int64_t N, std::int64_t k) {
  if (N <= 0 || k <= 0 || N % 2 != 0 || k % 2 == 0)
    throw Error(ErrorCode::BadParity, "floor_sum_star needs N even and k odd, both positive");
  std::int64_t s = 0;
  for (std::int64_t j = 1; j <= N - 1; j += 2)
    s += (j * k) / N;
  return s;
}

Real sine_product(int r, std::int64_t k) {
  if (r < 2)
    throw Error(ErrorCode::InvalidSpec, "sine_product needs r >= 2");
  require_odd(k, "k");
  std::int64_t N = std::int64_t(1) << r;
  Real p = 1;
  for (std::int64_t j = 1; j < N; j += 2)
    p *= sin_pi(Rational(j * k, N));
  return p;
}

Real half_sine_product(int r) {
  if (r < 2)
    throw Error(ErrorCode::InvalidSpec, "half_sine_product needs r >= 2");
  std::int64_t N = std::int64_t(1) << r;
  Real p = 1;
  for (std::int64_t j = 1; j <= N / 2; j += 2)
    p *= sin_pi(Rational(j, N));
  return p;
}

Real alt_sine_sum(int r, int t, std::int64_t omega) {
  if (r < 1)
    throw Error(ErrorCode::InvalidSpec, "alt_sine_sum needs r >= 1");
  std::int64_t N = std::int64_t(1) << r;
  Real s = 0;
  for (std::int64_t k = 1; k < N; k += 2) {
    Rational angle = t >= 0 ? Rational(k * omega, std::int64_t(1) << t)
                            : Rational(k * omega * (std::int64_t(1) << -t));
    Real term = sin_pi(angle);
    if ((k / 2) % 2)
      s -= term;
    else
      s += term;
  }
  return s;
}

Real cot_product(int r, std::int64_t k) {
  if (r < 2)
    throw Error(ErrorCode::InvalidSpec, "cot_product needs r >= 2");
  require_odd(k, "k");
  std::int64_t N = std::int64_t(1) << r;
  Real p = 1;
  for (std::int64_t j = 1; j <= N / 2; j += 2)
    p *= cot_pi(Rational(j * k, N));
  return p;
}

int cot_product_closed(int r, std::int64_t k) {
  require_odd(k, "k");
  if (r == 2)
    return ((k / 2) % 2) ? -1 : 1;
  return 1;
}

Real alt_cot_sum(int r, std::int64_t N, std::int64_t ell) {
  if (r < 2)
    throw Error(ErrorCode::InvalidSpec, "alt_cot_sum needs r >= 2");
  require_odd(ell, "ell");
  std::int64_t two_r = std::int64_t(1) << r;
  if (N != two_r && N != two_r / 2)
    throw Error(ErrorCode::InvalidSpec, "alt_cot_sum needs N = 2^r or 2^(r-1)");
  Real s = 0;
  for (std::int64_t k = 1; k <= N; k += 2) {
    Real term = cot_pi(Rational(k * ell, two_r));
    if ((k / 2) % 2)
      s -= term;
    else
      s += term;
  }
  return s;
}

Rational sine_product_closed(int r) {
  return Rational(1, BigInt(1) << ((1 << (r - 1)) - 1));
}

Real half_sine_product_closed(int r) {
  Real two = 2;
  return sqrt(two) / pow(two, 1 << (r - 2));
}

std::int64_t alt_sine_sum_closed(int r, int t, std::int64_t omega) {
  if (omega == 0)
    return 0;
  int nu = 0;
  std::int64_t ell = omega;
  while (ell % 2 == 0) {
    ell /= 2;
    ++nu;
  }
  if (t != nu + 1)
    return 0;
  std::int64_t sign = ((ell < 0 ? -ell - 1 : ell) / 2) % 2 ? -1 : 1;
  if (ell < 0)
    sign = -sign;
  return sign * (std::int64_t(1) << (r - 1));
}

std::int64_t alt_cot_sum_closed(std::int64_t N, std::int64_t ell) {
  std::int64_t sign = (ell / 2) % 2 ? -1 : 1;
  return sign * N / 2;
}

std::vector<IdentityCheck> identity_suite(const IdentitySuiteOptions& opt, bool parallel) {
  ensure_precision();
  std::vector<std::function<IdentityCheck()>> tasks;

  auto make = [](std::string id, std::string params, const Real& value, const Real& expected,
                 bool relative, double tol) {
    IdentityCheck c;
    c.identity = std::move(id);
    c.params = std::move(params);
    c.value = to_double(value);
    c.expected = to_double(expected);
    Real err = abs(value - expected);
    if (relative)
      err /= abs(expected);
    c.error = to_double(err);
    c.tolerance = tol;
    c.ok = err < Real(tol);
    return c;
  };

  for (std::int64_t N = 2; N <= opt.floor_max_N; N += 2)
    for (std::int64_t k = 1; k <= opt.floor_max_k; k += 2)
      tasks.push_back([N, k] {
        IdentityCheck c;
        c.identity = "floor_sum_star";
        c.params = "N=" + std::to_string(N) + " k=" + std::to_string(k);
        std::int64_t v = floor_sum_star(N, k);
        std::int64_t e = (k - 1) * N / 4;
        c.value = static_cast<double>(v);
        c.expected = static_cast<double>(e);
        c.error = static_cast<double>(v > e ? v - e : e - v);
        c.tolerance = 0;
        c.ok = v == e;
        return c;
      });

  for (int r = 2; r <= opt.max_r; ++r) {
    std::int64_t N = std::int64_t(1) << r;
    for (std::int64_t k = 1; k < N; k += 2)
      tasks.push_back([=] {
        return make("sine_product", "r=" + std::to_string(r) + " k=" + std::to_string(k),
                    sine_product(r, k), to_real(sine_product_closed(r)), true, opt.tolerance);
      });
  }

  for (int r = 2; r <= opt.k_independence_max_r; ++r) {
    std::int64_t N = std::int64_t(1) << r;
    for (std::int64_t k = 3; k < N; k += 2)
      tasks.push_back([=] {
        return make("sine_product_k_independence",
                    "r=" + std::to_string(r) + " k=" + std::to_string(k) + " vs k=1",
                    sine_product(r, k), sine_product(r, 1), true, opt.k_independence_tolerance);
      });
  }

  for (int r = 2; r <= opt.max_r; ++r)
    tasks.push_back([=] {
      return make("half_sine_product", "r=" + std::to_string(r), half_sine_product(r),
                  half_sine_product_closed(r), true, opt.tolerance);
    });

  for (int r = 2; r <= opt.max_r; ++r)
    for (int t = 0; t <= r; ++t)
      for (int nu = 0; nu <= r - 2; ++nu)
        for (std::int64_t ell = 1; ell <= opt.max_ell; ell += 2)
          tasks.push_back([=] {
            std::int64_t omega = (std::int64_t(1) << nu) * ell;
            return make("alt_sine_sum",
                        "r=" + std::to_string(r) + " t=" + std::to_string(t) +
                            " nu=" + std::to_string(nu) + " ell=" + std::to_string(ell),
                        alt_sine_sum(r, t, omega), Real(alt_sine_sum_closed(r, t, omega)), false,
                        opt.tolerance);
          });

  for (int r = 2; r <= opt.max_r; ++r) {
    std::int64_t N = std::int64_t(1) << r;
    for (std::int64_t k = 1; k < N; k += 2)
      tasks.push_back([=] {
        return make("cot_product", "r=" + std::to_string(r) + " k=" + std::to_string(k),
                    cot_product(r, k), Real(cot_product_closed(r, k)), false, opt.tolerance);
      });
  }

  for (int r = 2; r <= opt.max_r; ++r)
    for (std::int64_t N : {std::int64_t(1) << r, std::int64_t(1) << (r - 1)})
      for (std::int64_t ell = 1; ell <= opt.max_ell; ell += 2)
        tasks.push_back([=] {
          return make("alt_cot_sum",
                      "r=" + std::to_string(r) + " N=" + std::to_string(N) +
                          " ell=" + std::to_string(ell),
                      alt_cot_sum(r, N, ell), Real(alt_cot_sum_closed(N, ell)), false,
                      opt.tolerance);
        });

  std::vector<IdentityCheck> out(tasks.size());
  long count = static_cast<long>(tasks.size());
  auto run = [&](long i) {
    ensure_precision();
    try {
      out[i] = tasks[i]();
    } catch (const std::exception& e) {
      out[i].identity = "error";
      out[i].params = e.what();
      out[i].ok = false;
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i)
      run(i);
  } else {
    for (long i = 0; i < count; ++i)
      run(i);
  }
  return out;
}

}  // namespace flateta
