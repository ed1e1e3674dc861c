// The cotangent sum over powers of the generator, in a serial reference form
// and an OpenMP form.  Both evaluate the same per-k terms and add them in
// ascending k, so their results agree bit for bit.
#ifndef FLATETA_KERNELS_HPP_
#define FLATETA_KERNELS_HPP_

#include <vector>

#include "core.hpp"

namespace flateta {

struct CyclicEtaInput {
  int sigma = 1;                    // orientation sign of the adapted basis
  int m = 1;                        // number of rotation angles
  std::uint64_t N = 1;              // order of the holonomy
  std::vector<Rational> angles;     // t_j / pi
  Rational ell_gamma = 1;
  std::vector<std::uint64_t> ks;    // powers k with gamma^k in the prime set
};

// Term for one k: prod_j sin(k t_j) * cot(pi k ell_gamma / N).
Real cyclic_eta_term(const CyclicEtaInput& in, std::uint64_t k);

// -sigma * 2^m / N * sum_k term(k).
Real cyclic_eta_sum_serial(const CyclicEtaInput& in);
Real cyclic_eta_sum_parallel(const CyclicEtaInput& in);

int max_threads();

}  // namespace flateta

#endif
