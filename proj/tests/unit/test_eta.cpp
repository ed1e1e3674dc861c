#include <doctest.h>

#include <cmath>

#include "data.hpp"
#include "flateta/eta.hpp"
#include "flateta/spec_io.hpp"

using namespace flateta;

namespace {
double d(const Real& x) { return x.convert_to<double>(); }
}

TEST_SUITE("eta") {

TEST_CASE("tetracosm") {
  ManifoldSpec m = tetracosm();
  CHECK(eta_invariant(m).value() == -1);
  CHECK(eta_invariant_bruteforce(m).rounded == -1);
  HolonomyData h = analyze(m);
  CHECK(h.f_B == 2);
  CHECK(h.N == 4);
  CHECK(h.ell_gamma == 1);
  CHECK(h.nu == 0);
  CHECK(sigma_vB(h) == 1);
  EtaClosedForm cf = eta_closed_form(m);
  CHECK(cf.sigma == -1);
  CHECK(cf.r + 1 - cf.nu == 3);  // scale 8 pi
  CHECK(d(cf.evaluate(Real(0))) == doctest::Approx(-1.0).epsilon(1e-20));
}

TEST_CASE("tetracosm transforms") {
  ManifoldSpec m = tetracosm();
  CHECK(eta_invariant(generator_power(m, 3)).value() == -1);
  CHECK(eta_invariant(reverse_orientation(m)).value() == 1);
}

TEST_CASE("family against the eigenvector oracle") {
  auto rows = testdata::rows("eta_family.txt");
  REQUIRE(rows.size() == 240);
  for (const auto& f : rows) {
    int r = std::stoi(f[0]);
    BlockSpec b = testdata::parse_counts(r, f[1]);
    std::int64_t ell = std::stoll(f[2]);
    int sigma = std::stoi(f[3]);
    std::int64_t eta = std::stoll(f[4]);
    ManifoldSpec s = family_spec(b, ell);
    INFO(s.name, " ell=", ell);
    HolonomyData h = analyze(s);
    CHECK(h.sigma_coordinates == sigma);
    CHECK(eta_invariant(s).value() == eta);
    BruteforceResult bf = eta_invariant_bruteforce(s, true);
    CHECK(bf.rounded == eta);
    CHECK(bf.residual < 1e-6);
  }
}

TEST_CASE("large generators against the eigenvector oracle") {
  auto rows = testdata::rows("eta_large.txt");
  REQUIRE(rows.size() == 8);
  for (const auto& f : rows) {
    ManifoldSpec s = family_spec(testdata::parse_counts(std::stoi(f[0]), f[1]));
    INFO(s.name);
    CHECK(analyze(s).sigma_coordinates == std::stoi(f[3]));
    CHECK(eta_invariant(s).value() == std::stoll(f[4]));
    CHECK(eta_invariant_bruteforce(s, true).rounded == std::stoll(f[4]));
  }
}

TEST_CASE("magnitude law") {
  for (const auto& f : testdata::rows("eta_family.txt")) {
    BlockSpec b = testdata::parse_counts(std::stoi(f[0]), f[1]);
    std::int64_t eta = std::stoll(f[4]);
    CHECK(std::llabs(eta) == (std::int64_t(1) << (b.total_blocks() - 1)));
  }
}

TEST_CASE("Z_8 fixture") {
  ManifoldSpec z8 = nonstandard_z8();
  EtaInvariant e = eta_invariant(z8);
  CHECK(e.magnitude == 2);
  CHECK_FALSE(e.sign.has_value());
  CHECK(e.str() == "+-2");
  CHECK(analyze(z8).f_B == 3);
  CHECK(eta_invariant_bruteforce(z8).rounded == 2);
  CHECK_THROWS_AS(validate(nonstandard_z8_literal()), Error);
}

TEST_CASE("translation of powers") {
  ManifoldSpec m = tetracosm();
  auto b4 = translation_of_power(m.B, m.b, 4);
  CHECK(b4 == std::vector<Rational>{0, 0, 1});
}

TEST_CASE("spec validation errors") {
  ManifoldSpec m = tetracosm();
  m.b[2] = Rational(1, 2);
  CHECK_THROWS_AS(validate(m), Error);  // gamma^2 has a fixed point
  ManifoldSpec bad = tetracosm();
  bad.B(0, 0) = 2;
  CHECK_THROWS_AS(validate(bad), Error);
}

// mpmath, 30 digits
TEST_CASE("Hurwitz zeta") {
  CHECK(d(hurwitz_zeta(Real(2), Real(1))) == doctest::Approx(1.64493406684822643647241516665).epsilon(1e-15));
  CHECK(d(hurwitz_zeta(Real(-4.5), Real(0.3))) == doctest::Approx(0.0038058819301665798506681017374).epsilon(1e-13));
  CHECK(d(hurwitz_zeta(Real(4.5), Real(0.3))) == doctest::Approx(225.738073903994949208047120921).epsilon(1e-14));
  CHECK(d(hurwitz_zeta(Real(-0.5), Real(0.25))) == doctest::Approx(0.0903222587612462438741957208084).epsilon(1e-14));
  for (double a : {0.1, 0.25, 0.5, 0.75, 0.9})
    CHECK(std::abs(d(hurwitz_zeta(Real(0), Real(a))) - (0.5 - a)) < 1e-12);
  CHECK_THROWS_AS(hurwitz_zeta(Real(1), Real(0.5)), Error);
}

TEST_CASE("L(s, chi_4) and the zeta difference") {
  const double s[] = {-2, -1, -0.5, 0, 0.5, 2, 3};
  const double diff[] = {-0.03125, 0.0, 0.137589870614410125058332583828, 0.5,
                         1.3353829143792183533173818586, 14.6554495068355042408736562389,
                         62.0125533605996403509526301342};
  const double L[] = {-0.5, 0.0, 0.275179741228820250116665167656, 0.5,
                      0.6676914571896091766586909293, 0.915965594177219015054603514932,
                      0.968946146259369380483634845847};
  for (int i = 0; i < 7; ++i) {
    Real z = hurwitz_zeta(Real(s[i]), Real(0.25)) - hurwitz_zeta(Real(s[i]), Real(0.75));
    CHECK(std::abs(d(z) - diff[i]) < 1e-12 * std::max(1.0, std::abs(diff[i])));
    CHECK(std::abs(d(L_chi4(Real(s[i]))) - L[i]) < 1e-14);
  }
  CHECK(std::abs(d(L_chi4(Real(1)) - real_pi() / 4)) < 1e-25);
  for (int nu = 0; nu <= 3; ++nu) {
    Real s2(1.5);
    Real lhs = F_nu(nu, s2);
    Real rhs = pow(Real(2), (nu + 2) * s2) * L_chi4(s2);
    CHECK(std::abs(d(lhs - rhs)) < 1e-15 * d(rhs));
  }
}

TEST_CASE("closed form with a Gram lattice") {
  ManifoldSpec m = tetracosm();
  m.lattice.kind = LatticeKind::Gram;
  m.lattice.gram = RatMatrix::identity(3);
  m.lattice.gram(2, 2) = 4;
  EtaClosedForm cf = eta_closed_form(m);
  REQUIRE(cf.lambda_sq);
  CHECK(*cf.lambda_sq == Rational(1, 4));
  // eta(1) = -2 (8 pi / 2)^-1 * pi = -1/2
  CHECK(d(cf.evaluate(Real(1))) == doctest::Approx(-0.5).epsilon(1e-20));
}

}
