// First homology of Z_{2^r}-manifolds through the Smith normal form of the
// abelianized presentation, with the mod-2 cohomology and spin counts.
#ifndef FLATETA_HOMOLOGY_HPP_
#define FLATETA_HOMOLOGY_HPP_

#include <string>
#include <vector>

#include "eta.hpp"
#include "linalg.hpp"

namespace flateta {

struct AbelianGroup {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // d1 | d2 | ..., each >= 2

  BigInt torsion_order() const;
  int two_rank() const;  // number of even torsion factors
  std::string str() const;
  bool operator==(const AbelianGroup&) const = default;
};

struct H1Computation {
  BigMatrix relations;  // rows are relations, columns (gamma, e_1, ..., e_n)
  SmithForm snf;
  bool snf_verified = false;  // U M V = D with |det U| = |det V| = 1
  AbelianGroup group;
};

H1Computation h1_detailed(const ManifoldSpec& spec);
AbelianGroup h1(const ManifoldSpec& spec);
AbelianGroup h1_closed_form(const BlockSpec& blocks);

// dim H^1(M, Z_2) = free rank + number of even torsion factors.
int cohomology_mod2_rank(const ManifoldSpec& spec);
BigInt spin_structures(const ManifoldSpec& spec);

struct TorsionCheck {
  EtaInvariant eta;
  BigInt torsion_order = 0;
  int mod2_rank = 0;
  bool magnitude_ok = false;          // |eta| = |T| / 2 = 2^rank / 4
  std::optional<bool> sign_ok;        // eta = -|T| / 2, when the sign is known
  bool pass() const { return magnitude_ok && sign_ok.value_or(true); }
  std::string detail() const;
};

TorsionCheck eta_torsion_check(const ManifoldSpec& spec);

}  // namespace flateta

#endif
