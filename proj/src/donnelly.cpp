#include "flateta/donnelly.hpp"

#include "flateta/linalg.hpp"
#include "flateta/trig.hpp"

namespace flateta {

Real donnelly_sum(int h, std::uint64_t group_order, const std::vector<DonnellyTerm>& terms) {
  ensure_precision();
  Real sum = 0;
  for (const DonnellyTerm& t : terms) {
    Real term = pow(Real(2), t.c_prime);
    for (const Rational& angle : t.angles)
      term *= cot_pi(angle / 2);
    term *= cot_pi(t.a);
    sum += term;
  }
  Real sign = (h % 2) ? -1 : 1;
  return sign * sum / Real(static_cast<double>(group_order));
}

std::optional<Rational> rationalize(const Real& x, const BigInt& max_den, double tol) {
  ensure_precision();
  // Convergents p/q of the continued fraction of x.
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Real y = x;
  for (int step = 0; step < 200; ++step) {
    Real fl = floor(y);
    BigInt a = fl.convert_to<BigInt>();
    BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den)
      break;
    Rational c(p2, q2);
    if (abs(x - to_real(c)) < tol)
      return c;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Real frac = y - fl;
    if (frac == 0)
      break;
    y = 1 / frac;
  }
  return std::nullopt;
}

DonnellyHypothesis donnelly_hypothesis(const ManifoldSpec& spec) {
  DonnellyHypothesis hy;
  int n = spec.dimension();
  const IntMatrix& B = spec.B;
  if (n % 4 != 3) {
    hy.reason = "dimension is not 4h - 1";
    return hy;
  }
  if (spec.lattice.kind != LatticeKind::Canonical) {
    hy.reason = "lattice is not Z^n";
    return hy;
  }
  if (!is_signed_permutation(B) || determinant_sign(B) != 1) {
    hy.reason = "holonomy is not in SO(n, Z)";
    return hy;
  }
  for (int i = 0; i < n - 1; ++i)
    if (B(n - 1, i) != 0 || B(i, n - 1) != 0) {
      hy.reason = "holonomy is not of the form diag(B', 1)";
      return hy;
    }
  if (B(n - 1, n - 1) != 1) {
    hy.reason = "holonomy does not fix e_n";
    return hy;
  }
  for (int i = 0; i < n - 1; ++i)
    if (spec.b[i] != 0) {
      hy.reason = "translation is not along e_n";
      return hy;
    }
  hy.met = true;
  return hy;
}

DonnellyValue eta_donnelly(const ManifoldSpec& spec, bool force) {
  DonnellyHypothesis hy = donnelly_hypothesis(spec);
  if (!hy.met && !force)
    throw Error(ErrorCode::HypothesisViolated, hy.reason);
  if (!is_signed_permutation(spec.B))
    throw Error(ErrorCode::HypothesisViolated, "cycle counts need a signed permutation holonomy");
  SpecChecks checks = validate(spec);
  int n = spec.dimension();
  DonnellyValue v;
  v.h = (n + 1) / 4;
  HolonomyData d = analyze(spec);
  int orient = d.sigma_vB.value_or(d.sigma_coordinates);
  IntMatrix P = IntMatrix::identity(n);
  for (std::uint64_t k = 1; k < checks.N; ++k) {
    P = multiply(P, spec.B);
    if (fixed_dim(P) != 1 || rank(add_identity(P, 1)) != static_cast<std::size_t>(n))
      continue;
    DonnellyTerm t;
    t.k = k;
    t.c_prime = cycle_count(P) - 1;
    for (std::size_t j = 0; j < d.angles.size(); ++j) {
      Rational angle = d.angles[j].value() * Rational(static_cast<long long>(k));
      if (j == 0 && orient < 0)
        angle = -angle;
      t.angles.push_back(angle);
    }
    t.a = translation_of_power(spec.B, spec.b, k)[static_cast<std::size_t>(n - 1)];
    v.terms.push_back(std::move(t));
  }
  v.raw = donnelly_sum(v.h, checks.N, v.terms);
  BigInt cap = BigInt(checks.N) * BigInt(checks.N);
  v.exact = rationalize(v.raw, cap);
  return v;
}

DonnellyReport compare(const ManifoldSpec& spec, bool force) {
  DonnellyReport rep;
  rep.name = spec.name;
  rep.hypothesis = donnelly_hypothesis(spec);
  try {
    rep.eta_mp = eta_invariant(spec);
  } catch (const Error& e) {
    rep.error = e.what();
  }
  try {
    if (rep.hypothesis.met || force)
      rep.eta_do = eta_donnelly(spec, force);
  } catch (const Error& e) {
    if (!rep.error.empty())
      rep.error += "; ";
    rep.error += e.what();
  }
  if (rep.eta_do && rep.eta_do->exact && rep.eta_mp && rep.eta_mp->known()) {
    int sign = (rep.eta_do->h % 2) ? 1 : -1;  // (-1)^(h+1)
    rep.ratio_ok = *rep.eta_do->exact == Rational(sign * rep.eta_mp->value());
  }
  return rep;
}

TriscosmReport triscosm() {
  ensure_precision();
  TriscosmReport rep;
  rep.hypothesis.met = false;
  rep.hypothesis.reason = "B' = [[0,-1],[1,-1]] lies in SO(2) only after conjugation; it is not in SO(2, Z)";
  // Holonomy B = diag(B', 1) of order 3 rotates the hexagonal plane by 2 pi/3;
  // translation e_3 / 3, and B' permutes no basis vectors, so c(B'^k) = 1.
  rep.forced.h = 1;
  for (std::uint64_t k = 1; k <= 2; ++k) {
    DonnellyTerm t;
    t.k = k;
    t.c_prime = 1;
    t.angles = {Rational(2 * static_cast<long long>(k), 3)};
    t.a = Rational(static_cast<long long>(k), 3);
    rep.forced.terms.push_back(t);
  }
  rep.forced.raw = donnelly_sum(1, 3, rep.forced.terms);
  rep.forced.exact = rationalize(rep.forced.raw, BigInt(9));

  CyclicEtaInput in;
  in.sigma = 1;
  in.m = 1;
  in.N = 3;
  in.angles = {Rational(2, 3)};
  in.ell_gamma = 1;
  in.ks = {1, 2};
  rep.eta_true = cyclic_eta_sum_serial(in);
  rep.eta_true_exact = rationalize(rep.eta_true, BigInt(9));
  return rep;
}

}  // namespace flateta
