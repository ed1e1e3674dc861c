#include "flateta/homology.hpp"

#include <sstream>

namespace flateta {

BigInt AbelianGroup::torsion_order() const {
  BigInt p = 1;
  for (const BigInt& d : torsion)
    p *= d;
  return p;
}

int AbelianGroup::two_rank() const {
  int c = 0;
  for (const BigInt& d : torsion)
    if (d % 2 == 0)
      ++c;
  return c;
}

std::string AbelianGroup::str() const {
  std::vector<std::string> parts;
  if (free_rank == 1)
    parts.push_back("Z");
  else if (free_rank > 1)
    parts.push_back("Z^" + std::to_string(free_rank));
  std::size_t k = 0;
  while (k < torsion.size()) {
    std::size_t e = k;
    while (e < torsion.size() && torsion[e] == torsion[k])
      ++e;
    std::string t = "Z_" + torsion[k].str();
    if (e - k > 1)
      t += "^" + std::to_string(e - k);
    parts.push_back(t);
    k = e;
  }
  if (parts.empty())
    return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    s += " + " + parts[i];
  return s;
}

H1Computation h1_detailed(const ManifoldSpec& spec) {
  SpecChecks checks = validate(spec);
  const IntMatrix& B = spec.B;
  std::size_t n = B.rows();
  H1Computation h;
  h.relations = BigMatrix(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      h.relations(i, k + 1) = BigInt(B(k, i)) - (k == i ? 1 : 0);
  std::vector<Rational> bN = translation_of_power(B, spec.b, checks.N);
  h.relations(n, 0) = BigInt(checks.N);
  for (std::size_t k = 0; k < n; ++k)
    h.relations(n, k + 1) = -numerator(bN[k]);

  h.snf = smith_normal_form(h.relations);
  BigMatrix prod = mat_mul(mat_mul(h.snf.U, h.relations), h.snf.V);
  BigInt du = determinant(h.snf.U), dv = determinant(h.snf.V);
  h.snf_verified = prod == h.snf.D && (du == 1 || du == -1) && (dv == 1 || dv == -1);
  if (!h.snf_verified)
    throw Error(ErrorCode::InvalidSpec, "Smith normal form verification failed");

  int nonzero = 0;
  for (const BigInt& d : h.snf.diagonal) {
    if (d == 0)
      continue;
    ++nonzero;
    if (d > 1)
      h.group.torsion.push_back(d);
  }
  h.group.free_rank = static_cast<int>(n + 1) - nonzero;
  return h;
}

AbelianGroup h1(const ManifoldSpec& spec) { return h1_detailed(spec).group; }

AbelianGroup h1_closed_form(const BlockSpec& blocks) {
  blocks.validate();
  AbelianGroup g;
  g.free_rank = 1;
  g.torsion.assign(static_cast<std::size_t>(blocks.total_blocks()), BigInt(2));
  return g;
}

int cohomology_mod2_rank(const ManifoldSpec& spec) {
  AbelianGroup g = h1(spec);
  return g.free_rank + g.two_rank();
}

BigInt spin_structures(const ManifoldSpec& spec) {
  return BigInt(1) << cohomology_mod2_rank(spec);
}

std::string TorsionCheck::detail() const {
  std::ostringstream s;
  s << "eta = " << eta.str() << ", |T| = " << torsion_order << ", 2^rank/4 = ";
  if (mod2_rank >= 2)
    s << (BigInt(1) << (mod2_rank - 2));
  else
    s << "1/" << (1 << (2 - mod2_rank));
  return s.str();
}

TorsionCheck eta_torsion_check(const ManifoldSpec& spec) {
  TorsionCheck c;
  c.eta = eta_invariant(spec);
  AbelianGroup g = h1(spec);
  c.torsion_order = g.torsion_order();
  c.mod2_rank = g.free_rank + g.two_rank();
  BigInt twice = 2 * BigInt(c.eta.magnitude);
  bool spin_ok = c.mod2_rank >= 2 && (BigInt(c.eta.magnitude) << 2) == (BigInt(1) << c.mod2_rank);
  c.magnitude_ok = twice == c.torsion_order && spin_ok;
  if (c.eta.sign && c.eta.magnitude != 0)
    c.sign_ok = *c.eta.sign == -1;
  return c;
}

}  // namespace flateta
