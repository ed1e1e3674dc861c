// Eta function and eta invariant of Z_{2^r}-manifolds: manifold specs,
// holonomy analysis, the closed form, the brute-force cotangent sum, and the
// Hurwitz zeta / L(s, chi_4) evaluation.
#ifndef FLATETA_ETA_HPP_
#define FLATETA_ETA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "charpoly.hpp"
#include "core.hpp"
#include "kernels.hpp"
#include "matrices.hpp"

namespace flateta {

enum class LatticeKind { Canonical, Unknown, Basis, Gram };

struct LatticeDescriptor {
  LatticeKind kind = LatticeKind::Canonical;
  RatMatrix basis;      // Basis: columns are the lattice basis in orthonormal coordinates
  RatMatrix gram;       // Gram: inner products of the lattice basis
  int orientation = 1;  // Gram: orientation of the lattice basis

  // Gram matrix in lattice coordinates, when the metric is known.
  std::optional<RatMatrix> gram_matrix() const;
  // +1/-1 when the orientation of the lattice basis is known.
  std::optional<int> orientation_sign() const;
  std::string kind_name() const;
};

// A Z_{2^r}-manifold Gamma \ R^n with Gamma = <gamma = B L_b, L_Lambda>.  B and
// b are written in lattice coordinates.
struct ManifoldSpec {
  std::string name;
  int r = 0;  // 0: derive from the order of B
  IntMatrix B;
  std::vector<Rational> b;
  LatticeDescriptor lattice;
  std::optional<BlockSpec> blocks;
  std::int64_t ell = 1;  // translation numerator for block specs

  int dimension() const { return static_cast<int>(B.rows()); }
};

ManifoldSpec family_spec(const BlockSpec& blocks, std::int64_t ell = 1);
ManifoldSpec tetracosm();
ManifoldSpec nonstandard_z8();
// diag(K, J_1) acting on Z^7 itself with translation e_1 / 2; not torsion free.
ManifoldSpec nonstandard_z8_literal();
// Conjugation by the reflection diag(1, ..., 1, -1, 1).
ManifoldSpec reverse_orientation(const ManifoldSpec& spec);
// The same group presented with generator gamma^k (k odd).
ManifoldSpec generator_power(const ManifoldSpec& spec, std::uint64_t k);

// Translation part of gamma^k: sum_{j<k} B^j b.
std::vector<Rational> translation_of_power(const IntMatrix& B, const std::vector<Rational>& b,
                                           std::uint64_t k);

struct SpecChecks {
  std::uint64_t N = 1;
  int r = 0;
  bool torsion_free = false;
};

// Checks det B = +1, order 2^r, B-stable metric, gamma^N in L_Lambda and
// torsion freeness.  Throws on the first failure.
SpecChecks validate(const ManifoldSpec& spec);

struct HolonomyData {
  std::uint64_t N = 1;
  int r = 0;
  int n = 0;
  int n_B = 0;
  std::vector<AngleRational> angles;
  CyclotomicFactorization c_exponents;
  int f_B = 0;
  std::optional<int> cycles;          // c(B) when B is a signed permutation
  std::vector<BigInt> v_B;            // primitive fixed vector of the dual lattice, dual coordinates
  std::vector<BigInt> fixed_vector;   // primitive fixed lattice vector, oriented by v_B
  std::optional<Rational> lambda_sq;  // |v_B|^2 when the metric is known
  BigInt ell_gamma = 0;
  int nu = 0;
  BigInt ell_odd = 1;
  int sigma_coordinates = 1;          // adapted-basis sign in lattice coordinates
  std::optional<int> sigma_vB;        // sigma_coordinates times the lattice orientation
  bool in_prime_set = false;
};

// Full analysis; throws FixedRankNotOne when the fixed space is not a line.
HolonomyData analyze(const ManifoldSpec& spec);
int sigma_vB(const HolonomyData& data);

struct EtaInvariant {
  std::int64_t magnitude = 0;
  std::optional<int> sign;  // empty when the orientation is unknown

  bool known() const { return magnitude == 0 || sign.has_value(); }
  std::int64_t value() const;
  std::string str() const;
};

EtaInvariant eta_invariant(const ManifoldSpec& spec);

struct BruteforceResult {
  Real raw;
  std::int64_t rounded = 0;
  double residual = 0;
  bool sign_known = true;
  std::vector<std::uint64_t> ks;
};

// Independent oracle: cotangent sum over the powers gamma^k in the prime set,
// each membership decided from B^k directly.
BruteforceResult eta_invariant_bruteforce(const ManifoldSpec& spec, bool parallel = false);

struct EtaClosedForm {
  bool zero = true;
  std::optional<int> sigma;  // sigma_gamma
  int f_B = 0;
  int r = 0;
  int nu = 0;
  std::optional<Rational> lambda_sq;

  // eta(s) = sigma 2^(f_B-1) (2^(r+1-nu) pi lambda)^(-s) (zeta(s,1/4) - zeta(s,3/4))
  Real evaluate(const Real& s) const;
  double lambda() const;
};

EtaClosedForm eta_closed_form(const ManifoldSpec& spec);

Real hurwitz_zeta(const Real& s, const Real& a);
// Alternating series for s > 0, Hurwitz zeta continuation otherwise.
Real L_chi4(const Real& s);
// sum over odd j < 2^(nu+1) of (-1)^[j/2] (zeta(s, j/2^(nu+2)) - zeta(s, 1 - j/2^(nu+2)))
Real F_nu(int nu, const Real& s);

}  // namespace flateta

#endif
