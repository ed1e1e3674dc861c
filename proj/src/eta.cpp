#include "flateta/eta.hpp"

#include <cmath>
#include <map>

#include "flateta/linalg.hpp"
#include "flateta/trig.hpp"

namespace flateta {

std::optional<RatMatrix> LatticeDescriptor::gram_matrix() const {
  switch (kind) {
    case LatticeKind::Canonical:
      return std::nullopt;  // identity; callers use the dimension
    case LatticeKind::Basis:
      return mat_mul(basis.transposed(), basis);
    case LatticeKind::Gram:
      return gram;
    case LatticeKind::Unknown:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<int> LatticeDescriptor::orientation_sign() const {
  switch (kind) {
    case LatticeKind::Canonical:
      return 1;
    case LatticeKind::Basis:
      return sign_of(determinant(basis));
    case LatticeKind::Gram:
      return orientation;
    case LatticeKind::Unknown:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string LatticeDescriptor::kind_name() const {
  switch (kind) {
    case LatticeKind::Canonical: return "canonical";
    case LatticeKind::Unknown: return "unknown";
    case LatticeKind::Basis: return "basis";
    case LatticeKind::Gram: return "gram";
  }
  return "?";
}

ManifoldSpec family_spec(const BlockSpec& blocks, std::int64_t ell) {
  if (ell <= 0 || ell % 2 == 0)
    throw Error(ErrorCode::BadParity, "translation numerator must be odd and positive");
  ManifoldSpec s;
  s.B = assemble_B(blocks);
  s.r = blocks.r;
  s.blocks = blocks;
  s.ell = ell;
  int n = s.dimension();
  s.b.assign(n, Rational(0));
  s.b[n - 1] = Rational(ell, std::int64_t(1) << blocks.r);
  s.name = "M" + blocks.j_tuple_string();
  if (ell != 1)
    s.name += "_ell" + std::to_string(ell);
  return s;
}

ManifoldSpec tetracosm() {
  ManifoldSpec s = family_spec(BlockSpec::from_j(2, {1}));
  s.name = "tetracosm";
  return s;
}

ManifoldSpec nonstandard_z8() {
  // The 5x5 block is an order-8 integral matrix K written in
  // the basis f_k = e_k + e_5 (k < 5), f_5 = 2 e_5 of the even-sum sublattice,
  // on which Z(f_1 - f_5) is the fixed lattice.
  IntMatrix K = parse_int_matrix_rows({{1, 0, 0, 1, 0},
                                       {0, 0, 1, 0, 0},
                                       {0, 0, 0, -1, 0},
                                       {-2, -1, -1, -1, -2},
                                       {0, 0, 0, 0, 1}});
  ManifoldSpec s;
  s.name = "nonstandard-z8";
  s.r = 3;
  s.B = block_diag({K, make_J(1)});
  s.b.assign(7, Rational(0));
  s.b[4] = Rational(1, 8);
  s.lattice.kind = LatticeKind::Unknown;
  return s;
}

ManifoldSpec nonstandard_z8_literal() {
  IntMatrix K = parse_int_matrix_rows({{1, 0, 0, 1, 0},
                                       {0, 0, 1, 0, 0},
                                       {0, 0, 0, -1, 0},
                                       {-1, 0, 0, 0, -1},
                                       {-1, -1, 0, -1, 0}});
  ManifoldSpec s;
  s.name = "nonstandard-z8-literal";
  s.r = 3;
  s.B = block_diag({K, make_J(1)});
  s.b.assign(7, Rational(0));
  s.b[0] = Rational(1, 2);
  s.lattice.kind = LatticeKind::Unknown;
  return s;
}

namespace {

IntMatrix reflection(int n) {
  IntMatrix R = IntMatrix::identity(n);
  if (n >= 2)
    R(n - 2, n - 2) = -1;
  return R;
}

std::vector<Rational> apply_matrix(const IntMatrix& B, const std::vector<Rational>& v) {
  std::vector<Rational> out(B.rows(), Rational(0));
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j)
      if (B(i, j) != 0)
        out[i] += Rational(B(i, j)) * v[j];
  return out;
}

}  // namespace

ManifoldSpec reverse_orientation(const ManifoldSpec& spec) {
  ManifoldSpec s = spec;
  int n = spec.dimension();
  IntMatrix R = reflection(n);
  s.blocks.reset();
  s.name = spec.name + "-reversed";
  switch (spec.lattice.kind) {
    case LatticeKind::Canonical:
    case LatticeKind::Unknown:
      s.B = multiply(multiply(R, spec.B), R);
      s.b = apply_matrix(R, spec.b);
      break;
    case LatticeKind::Basis:
      s.lattice.basis = mat_mul(to_rational(R), spec.lattice.basis);
      break;
    case LatticeKind::Gram:
      s.lattice.orientation = -spec.lattice.orientation;
      break;
  }
  return s;
}

std::vector<Rational> translation_of_power(const IntMatrix& B, const std::vector<Rational>& b,
                                           std::uint64_t k) {
  std::vector<Rational> sum(b.size(), Rational(0));
  std::vector<Rational> v = b;
  for (std::uint64_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < b.size(); ++i)
      sum[i] += v[i];
    v = apply_matrix(B, v);
  }
  return sum;
}

ManifoldSpec generator_power(const ManifoldSpec& spec, std::uint64_t k) {
  if (k % 2 == 0)
    throw Error(ErrorCode::BadParity, "generator power must be odd");
  ManifoldSpec s = spec;
  s.B = power(spec.B, k);
  s.b = translation_of_power(spec.B, spec.b, k);
  s.blocks.reset();
  s.name = spec.name + "^" + std::to_string(k);
  return s;
}

SpecChecks validate(const ManifoldSpec& spec) {
  const IntMatrix& B = spec.B;
  if (!B.is_square() || B.rows() == 0)
    throw Error(ErrorCode::InvalidSpec, "holonomy matrix must be square and non-empty");
  std::size_t n = B.rows();
  if (spec.b.size() != n)
    throw Error(ErrorCode::InvalidSpec, "translation length does not match the dimension");
  if (determinant_sign(B) != 1)
    throw Error(ErrorCode::InvalidSpec, "holonomy must have determinant +1");
  SpecChecks c;
  c.N = matrix_order(B);
  if (!is_power_of_two(c.N))
    throw Error(ErrorCode::NotTwoPowerOrder, "order " + std::to_string(c.N) + " is not a power of two");
  c.r = log2_exact(c.N);
  if (spec.r != 0 && spec.r != c.r)
    throw Error(ErrorCode::InvalidSpec, "declared r = " + std::to_string(spec.r) +
                                            " but the holonomy has order 2^" + std::to_string(c.r));

  const LatticeDescriptor& L = spec.lattice;
  switch (L.kind) {
    case LatticeKind::Canonical:
      if (!is_orthogonal(B))
        throw Error(ErrorCode::InvalidSpec, "canonical lattice needs an orthogonal holonomy matrix");
      break;
    case LatticeKind::Basis:
      if (L.basis.rows() != n || L.basis.cols() != n || determinant(L.basis) == 0)
        throw Error(ErrorCode::InvalidSpec, "lattice basis must be an invertible n x n matrix");
      break;
    case LatticeKind::Gram: {
      if (L.gram.rows() != n || L.gram.cols() != n || L.gram != L.gram.transposed())
        throw Error(ErrorCode::InvalidSpec, "Gram matrix must be symmetric n x n");
      for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            minor(i, j) = L.gram(i, j);
        if (determinant(minor) <= 0)
          throw Error(ErrorCode::InvalidSpec, "Gram matrix is not positive definite");
      }
      if (L.orientation != 1 && L.orientation != -1)
        throw Error(ErrorCode::InvalidSpec, "orientation must be +1 or -1");
      break;
    }
    case LatticeKind::Unknown:
      break;
  }
  if (auto G = L.gram_matrix()) {
    RatMatrix Bq = to_rational(B);
    if (mat_mul(mat_mul(Bq.transposed(), *G), Bq) != *G)
      throw Error(ErrorCode::InvalidSpec, "the metric is not invariant under the holonomy");
  }

  std::vector<Rational> bN = translation_of_power(B, spec.b, c.N);
  std::vector<BigInt> bN_int;
  for (const Rational& q : bN) {
    if (denominator(q) != 1)
      throw Error(ErrorCode::InvalidSpec, "gamma^N is not a lattice translation");
    bN_int.push_back(numerator(q));
  }
  if (c.N == 1) {
    c.torsion_free = true;
  } else {
    // An element of order two exists iff b_N lies in (I + B^(N/2)) Z^n.
    IntMatrix IA = add_identity(power(B, c.N / 2), 1);
    c.torsion_free = !in_column_lattice(to_big(IA), bN_int);
  }
  if (!c.torsion_free)
    throw Error(ErrorCode::NotTorsionFree, "the group contains elements of finite order");
  return c;
}

namespace {

std::vector<AngleRational> angles_from(const CyclotomicFactorization& f) {
  std::vector<AngleRational> angles;
  for (auto it = f.exponents.rbegin(); it != f.exponents.rend(); ++it) {
    auto [d, c] = *it;
    if (d <= 2)
      continue;
    std::int64_t den = static_cast<std::int64_t>(d / 2);
    for (int m = 0; m < c; ++m)
      for (std::int64_t k = 1; k < den; k += 2)
        angles.push_back({k, den});
  }
  for (int m = 0; m < f.c(2) / 2; ++m)
    angles.push_back({1, 1});
  return angles;
}

template<typename T>
T cos_of(const AngleRational& a);

template<>
double cos_of<double>(const AngleRational& a) {
  return std::cos(M_PI * static_cast<double>(a.num) / static_cast<double>(a.den));
}

template<>
Real cos_of<Real>(const AngleRational& a) {
  return cos_pi(a.value());
}

template<typename T>
T norm2(const std::vector<T>& v) {
  T s = 0;
  for (const T& x : v)
    s += x * x;
  return s;
}

// Sign of det(u_1, B u_1, ..., u_m, B u_m, z) for real eigen-planes u_j of
// each rotation angle; nullopt when the numerics are not conclusive.
template<typename T>
std::optional<int> adapted_sign(const IntMatrix& B, const std::vector<AngleRational>& angles,
                                const std::vector<BigInt>& z, const T& tol) {
  std::size_t n = B.rows();
  Matrix<T> Bt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      Bt(i, j) = T(static_cast<double>(B(i, j)));
  Matrix<T> B2 = mat_mul(Bt, Bt);

  std::map<AngleRational, int> mult;
  for (const AngleRational& a : angles)
    ++mult[a];

  std::vector<std::vector<T>> cols;
  std::vector<std::vector<T>> ortho;  // orthonormal copy for independence tests
  auto add_ortho = [&](std::vector<T> v) {
    for (const auto& q : ortho) {
      T d = 0;
      for (std::size_t i = 0; i < n; ++i)
        d += v[i] * q[i];
      for (std::size_t i = 0; i < n; ++i)
        v[i] -= d * q[i];
    }
    T nv = sqrt(norm2(v));
    for (auto& x : v)
      x /= nv;
    ortho.push_back(std::move(v));
  };
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    const AngleRational& a = it->first;
    int c = it->second;
    T two_cos = 2 * cos_of<T>(a);
    Matrix<T> M = B2;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        M(i, j) -= two_cos * Bt(i, j);
    for (std::size_t i = 0; i < n; ++i)
      M(i, i) += 1;
    auto kernel = numeric_nullspace(M, tol);
    if (kernel.size() != static_cast<std::size_t>(2 * c))
      return std::nullopt;
    int taken = 0;
    int want = a.num == a.den ? 2 * c : c;
    for (auto& u : kernel) {
      if (taken == want)
        break;
      std::vector<T> res = u;
      for (const auto& q : ortho) {
        T d = 0;
        for (std::size_t i = 0; i < n; ++i)
          d += res[i] * q[i];
        for (std::size_t i = 0; i < n; ++i)
          res[i] -= d * q[i];
      }
      if (sqrt(norm2(res)) <= sqrt(norm2(u)) * T(1e-6))
        continue;
      if (a.num == a.den) {
        // Rotation by pi: every basis of the eigenspace is adapted.
        cols.push_back(u);
        add_ortho(u);
        ++taken;
        continue;
      }
      std::vector<T> bu = mat_vec(Bt, u);
      cols.push_back(u);
      cols.push_back(bu);
      add_ortho(u);
      add_ortho(bu);
      ++taken;
    }
    if (a.num == a.den)
      taken /= 2;
    if (taken != c)
      return std::nullopt;
  }
  std::vector<T> zt(n);
  for (std::size_t i = 0; i < n; ++i)
    zt[i] = T(z[i].convert_to<double>());
  cols.push_back(zt);
  if (cols.size() != n)
    return std::nullopt;
  // Gram-Schmidt keeps the orientation, and the orthonormal frame has det +-1.
  add_ortho(zt);
  Matrix<T> A(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      A(i, j) = ortho[j][i];
  using std::abs;
  T det = numeric_determinant(A);
  if (abs(abs(det) - 1) > T(1e-6))
    return std::nullopt;
  return det > 0 ? 1 : -1;
}

int sign_of_ell_twist(const BigInt& ell_odd) {
  BigInt m = ell_odd % 4;
  if (m < 0)
    m += 4;
  return m == 1 ? 1 : -1;
}

}  // namespace

HolonomyData analyze(const ManifoldSpec& spec) {
  SpecChecks checks = validate(spec);
  HolonomyData d;
  const IntMatrix& B = spec.B;
  d.n = spec.dimension();
  d.N = checks.N;
  d.r = checks.r;
  d.c_exponents = cyclotomic_factor(char_poly(B));
  d.f_B = d.c_exponents.factor_count();
  d.angles = angles_from(d.c_exponents);
  d.n_B = fixed_dim(B);
  if (is_signed_permutation(B))
    d.cycles = cycle_count(B);
  if (d.n_B != 1)
    throw Error(ErrorCode::FixedRankNotOne,
                "fixed space has dimension " + std::to_string(d.n_B) + ", expected 1");

  auto wk = nullspace(to_rational(add_identity(B.transposed(), -1)));
  auto zk = nullspace(to_rational(add_identity(B, -1)));
  d.v_B = primitive_integer(wk.at(0));
  d.fixed_vector = primitive_integer(zk.at(0));
  Rational wb = 0;
  for (int i = 0; i < d.n; ++i)
    wb += Rational(d.v_B[i]) * spec.b[i];
  if (wb == 0)
    throw Error(ErrorCode::InvalidSpec, "translation has no component along the fixed line");
  if (wb < 0) {
    for (auto& x : d.v_B)
      x = -x;
    wb = -wb;
  }
  BigInt wz = 0;
  for (int i = 0; i < d.n; ++i)
    wz += d.v_B[i] * d.fixed_vector[i];
  if (wz < 0)
    for (auto& x : d.fixed_vector)
      x = -x;

  Rational ellg = wb * Rational(static_cast<long long>(d.N));
  if (denominator(ellg) != 1)
    throw Error(ErrorCode::InvalidSpec, "N <v_B, b> is not an integer");
  d.ell_gamma = numerator(ellg);
  d.nu = two_adic_valuation(d.ell_gamma);
  d.ell_odd = d.ell_gamma >> d.nu;

  if (spec.lattice.kind == LatticeKind::Canonical) {
    d.lambda_sq = Rational(0);
    for (const BigInt& x : d.v_B)
      *d.lambda_sq += Rational(x * x);
  } else if (auto G = spec.lattice.gram_matrix()) {
    RatMatrix Gi = inverse(*G);
    Rational s = 0;
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j)
        s += Rational(d.v_B[i]) * Gi(i, j) * Rational(d.v_B[j]);
    d.lambda_sq = s;
  }

  std::optional<int> sc = adapted_sign<double>(B, d.angles, d.fixed_vector, 1e-9);
  if (!sc) {
    ensure_precision();
    sc = adapted_sign<Real>(B, d.angles, d.fixed_vector, Real(1e-25));
  }
  if (!sc)
    throw Error(ErrorCode::ResidualTooLarge, "could not build an oriented adapted basis");
  d.sigma_coordinates = *sc;
  if (auto o = spec.lattice.orientation_sign())
    d.sigma_vB = *sc * *o;
  d.in_prime_set = d.c_exponents.c(2) == 0;
  return d;
}

int sigma_vB(const HolonomyData& data) {
  if (!data.sigma_vB)
    throw Error(ErrorCode::InvalidSpec, "orientation of the lattice is unknown");
  return *data.sigma_vB;
}

std::int64_t EtaInvariant::value() const {
  if (magnitude == 0)
    return 0;
  if (!sign)
    throw Error(ErrorCode::InvalidSpec, "eta sign is unknown for this lattice");
  return *sign * magnitude;
}

std::string EtaInvariant::str() const {
  if (magnitude == 0)
    return "0";
  if (!sign)
    return "+-" + std::to_string(magnitude);
  return std::to_string(*sign * magnitude);
}

namespace {

void require_dimension(const ManifoldSpec& spec) {
  if (spec.dimension() % 4 != 3)
    throw Error(ErrorCode::BadDimension,
                "dimension " + std::to_string(spec.dimension()) + " is not 3 mod 4");
}

// True when eta vanishes for structural reasons: r <= 1 or n_B > 1.
bool trivially_zero(const ManifoldSpec& spec, const SpecChecks& checks) {
  return checks.r <= 1 || fixed_dim(spec.B) != 1;
}

}  // namespace

EtaInvariant eta_invariant(const ManifoldSpec& spec) {
  require_dimension(spec);
  SpecChecks checks = validate(spec);
  EtaInvariant e;
  if (trivially_zero(spec, checks)) {
    e.sign = 0;
    return e;
  }
  HolonomyData d = analyze(spec);
  if (!d.in_prime_set) {
    e.sign = 0;
    return e;
  }
  if (d.nu > d.r - 2)
    throw Error(ErrorCode::HypothesisViolated, "nu exceeds r - 2");
  e.magnitude = std::int64_t(1) << (d.f_B - 2);
  if (d.sigma_vB)
    e.sign = -*d.sigma_vB * sign_of_ell_twist(d.ell_odd);
  return e;
}

BruteforceResult eta_invariant_bruteforce(const ManifoldSpec& spec, bool parallel) {
  require_dimension(spec);
  SpecChecks checks = validate(spec);
  ensure_precision();
  BruteforceResult res;
  res.raw = 0;
  if (trivially_zero(spec, checks))
    return res;
  HolonomyData d = analyze(spec);
  int n = d.n;
  CyclicEtaInput in;
  in.sigma = d.sigma_vB.value_or(d.sigma_coordinates);
  in.m = (n - 1) / 2;
  in.N = d.N;
  for (const AngleRational& a : d.angles)
    in.angles.push_back(a.value());
  in.ell_gamma = Rational(d.ell_gamma);
  IntMatrix P = IntMatrix::identity(n);
  for (std::uint64_t k = 1; k < d.N; ++k) {
    P = multiply(P, spec.B);
    if (fixed_dim(P) == 1 && rank(add_identity(P, 1)) == static_cast<std::size_t>(n))
      in.ks.push_back(k);
  }
  res.ks = in.ks;
  res.raw = parallel ? cyclic_eta_sum_parallel(in) : cyclic_eta_sum_serial(in);
  Real rounded = round(res.raw);
  res.rounded = rounded.convert_to<std::int64_t>();
  res.residual = abs(res.raw - rounded).convert_to<double>();
  if (res.residual >= 1e-6)
    throw Error(ErrorCode::ResidualTooLarge,
                "cotangent sum is " + std::to_string(res.residual) + " away from an integer");
  res.sign_known = d.sigma_vB.has_value();
  if (!res.sign_known && res.rounded < 0)
    res.rounded = -res.rounded;
  return res;
}

EtaClosedForm eta_closed_form(const ManifoldSpec& spec) {
  require_dimension(spec);
  SpecChecks checks = validate(spec);
  EtaClosedForm cf;
  cf.r = checks.r;
  if (trivially_zero(spec, checks))
    return cf;
  HolonomyData d = analyze(spec);
  cf.f_B = d.f_B;
  cf.nu = d.nu;
  cf.lambda_sq = d.lambda_sq;
  if (!d.in_prime_set)
    return cf;
  if (d.nu > d.r - 2)
    throw Error(ErrorCode::HypothesisViolated, "nu exceeds r - 2");
  cf.zero = false;
  if (d.sigma_vB)
    cf.sigma = -*d.sigma_vB * sign_of_ell_twist(d.ell_odd);
  return cf;
}

double EtaClosedForm::lambda() const {
  if (!lambda_sq)
    return std::nan("");
  return std::sqrt(lambda_sq->convert_to<double>());
}

Real EtaClosedForm::evaluate(const Real& s) const {
  ensure_precision();
  if (zero)
    return Real(0);
  Real coeff = Real(sigma.value_or(1)) * pow(Real(2), f_B - 1);
  if (s == 0)
    return coeff * L_chi4(s);
  if (!lambda_sq)
    throw Error(ErrorCode::InvalidSpec, "lambda_B is unknown, eta(s) needs the metric");
  Real lam = sqrt(to_real(*lambda_sq));
  Real scale = pow(Real(2), r - 1 - nu) * real_pi() * lam;
  return coeff * pow(scale, -s) * L_chi4(s);
}

namespace {

// B_{2k} / (2k)! for k = 1..7.
const Rational& bernoulli_ratio(int k) {
  static const Rational table[] = {
      Rational(1, 6) / Rational(2),
      Rational(-1, 30) / Rational(24),
      Rational(1, 42) / Rational(720),
      Rational(-1, 30) / Rational(40320),
      Rational(5, 66) / Rational(3628800),
      Rational(-691, 2730) / Rational(BigInt("479001600")),
      Rational(7, 6) / Rational(BigInt("87178291200")),
  };
  return table[k - 1];
}

}  // namespace

Real hurwitz_zeta(const Real& s, const Real& a) {
  ensure_precision();
  if (s == 1)
    throw Error(ErrorCode::PoleAtOne, "zeta(s, a) has a pole at s = 1");
  if (!(a > 0) || a > 1)
    throw Error(ErrorCode::InvalidSpec, "hurwitz_zeta needs 0 < a <= 1");
  const int M = 16;
  Real sum = 0;
  for (int k = 0; k < M; ++k)
    sum += pow(Real(k) + a, -s);
  Real x = Real(M) + a;
  Real x_s = pow(x, -s);
  sum += x * x_s / (s - 1) + x_s / 2;
  Real poch = s;
  Real xp = x_s / x;  // x^(-s-1)
  Real x2 = x * x;
  for (int k = 1; k <= 7; ++k) {
    sum += to_real(bernoulli_ratio(k)) * poch * xp;
    poch *= (s + 2 * k - 1) * (s + 2 * k);
    xp /= x2;
  }
  return sum;
}

Real L_chi4(const Real& s) {
  ensure_precision();
  if (s > 0) {
    // sum (-1)^k (2k+1)^(-s), accelerated (Cohen, Rodriguez Villegas, Zagier).
    int n = static_cast<int>(ensure_precision() / 2.5) + 10;
    Real d = pow(3 + sqrt(Real(8)), n);
    d = (d + 1 / d) / 2;
    Real b = -1;
    Real c = -d;
    Real sum = 0;
    for (int k = 0; k < n; ++k) {
      c = b - c;
      sum += c * pow(Real(2 * k + 1), -s);
      b = b * Real(k + n) * Real(k - n) / ((Real(k) + Real(0.5)) * Real(k + 1));
    }
    return sum / d;
  }
  return pow(Real(4), -s) * (hurwitz_zeta(s, Real(0.25)) - hurwitz_zeta(s, Real(0.75)));
}

Real F_nu(int nu, const Real& s) {
  ensure_precision();
  std::int64_t q = std::int64_t(1) << (nu + 2);
  Real sum = 0;
  for (std::int64_t j = 1; j < q / 2; j += 2) {
    Real a = to_real(Rational(j, q));
    Real term = hurwitz_zeta(s, a) - hurwitz_zeta(s, 1 - a);
    if ((j / 2) % 2)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

}  // namespace flateta
