// Donnelly's eta formula for holonomy in SO(n, Z) with canonical lattice, the
// comparison with the eta module, and the Z_3 triscosm counterexample.
#ifndef FLATETA_DONNELLY_HPP_
#define FLATETA_DONNELLY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "eta.hpp"

namespace flateta {

// One group element B^k L_{b_k} of the sum.
struct DonnellyTerm {
  std::uint64_t k = 0;
  int c_prime = 0;              // c(B'^k): orbits of B'^k on the basis vectors
  std::vector<Rational> angles; // oriented rotation angles of B^k, units of pi
  Rational a;                   // <e_n, b_k>
};

// (-1)^h / |F| * sum 2^c' prod cot(angle/2) cot(pi a)
Real donnelly_sum(int h, std::uint64_t group_order, const std::vector<DonnellyTerm>& terms);

// Closest fraction with denominator <= max_den when within tol.
std::optional<Rational> rationalize(const Real& x, const BigInt& max_den, double tol = 1e-9);

struct DonnellyHypothesis {
  bool met = false;
  std::string reason;  // first failed condition
};

DonnellyHypothesis donnelly_hypothesis(const ManifoldSpec& spec);

struct DonnellyValue {
  Real raw;
  std::optional<Rational> exact;
  int h = 0;
  std::vector<DonnellyTerm> terms;
};

// Throws HypothesisViolated unless the hypothesis holds or force is set.
DonnellyValue eta_donnelly(const ManifoldSpec& spec, bool force = false);

struct DonnellyReport {
  std::string name;
  DonnellyHypothesis hypothesis;
  std::optional<DonnellyValue> eta_do;
  std::optional<EtaInvariant> eta_mp;
  std::optional<bool> ratio_ok;  // eta_do = (-1)^(h+1) eta_mp
  std::string error;             // computation failures, if any
};

DonnellyReport compare(const ManifoldSpec& spec, bool force = false);

struct TriscosmReport {
  DonnellyValue forced;   // Donnelly's formula applied outside its hypothesis
  Real eta_true;          // cotangent sum over the Z_3 holonomy
  std::optional<Rational> eta_true_exact;
  DonnellyHypothesis hypothesis;
};

TriscosmReport triscosm();

}  // namespace flateta

#endif
