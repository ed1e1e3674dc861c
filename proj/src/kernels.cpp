#include "flateta/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flateta/trig.hpp"

namespace flateta {

Real cyclic_eta_term(const CyclicEtaInput& in, std::uint64_t k) {
  Rational kq(static_cast<long long>(k));
  Real p = 1;
  for (const Rational& t : in.angles)
    p *= sin_pi(kq * t);
  return p * cot_pi(kq * in.ell_gamma / static_cast<long long>(in.N));
}

namespace {

Real finish(const CyclicEtaInput& in, const Real& sum) {
  Real scale = pow(Real(2), in.m) / Real(static_cast<long long>(in.N));
  return -in.sigma * scale * sum;
}

}  // namespace

Real cyclic_eta_sum_serial(const CyclicEtaInput& in) {
  ensure_precision();
  Real sum = 0;
  for (std::uint64_t k : in.ks)
    sum += cyclic_eta_term(in, k);
  return finish(in, sum);
}

Real cyclic_eta_sum_parallel(const CyclicEtaInput& in) {
  ensure_precision();
  long count = static_cast<long>(in.ks.size());
  std::vector<Real> terms(in.ks.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    ensure_precision();
    try {
      terms[i] = cyclic_eta_term(in, in.ks[i]);
    } catch (...) {
#pragma omp critical(flateta_kernel_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  Real sum = 0;
  for (const Real& t : terms)
    sum += t;
  return finish(in, sum);
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace flateta
