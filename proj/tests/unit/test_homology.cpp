#include <doctest.h>

#include "data.hpp"
#include "flateta/homology.hpp"

using namespace flateta;

TEST_SUITE("homology") {

TEST_CASE("family against sympy Smith forms") {
  auto rows = testdata::rows("h1_family.txt");
  REQUIRE(rows.size() == 60);
  for (const auto& f : rows) {
    BlockSpec b = testdata::parse_counts(std::stoi(f[0]), f[1]);
    ManifoldSpec s = family_spec(b);
    INFO(s.name);
    AbelianGroup expect;
    expect.free_rank = std::stoi(f[2]);
    if (f[3] != "-") {
      std::stringstream ss(f[3]);
      std::string t;
      while (std::getline(ss, t, ','))
        expect.torsion.push_back(BigInt(t));
    }
    H1Computation h = h1_detailed(s);
    CHECK(h.snf_verified);
    CHECK(h.group == expect);
    CHECK(h1_closed_form(b) == expect);
  }
}

TEST_CASE("tetracosm and the Z_8 fixture") {
  CHECK(h1(tetracosm()).str() == "Z + Z_2");
  AbelianGroup g = h1(nonstandard_z8());
  CHECK(g.str() == "Z + Z_2^2");
  CHECK(g.torsion_order() == 4);
  CHECK(spin_structures(nonstandard_z8()) == 8);
  TorsionCheck t = eta_torsion_check(nonstandard_z8());
  CHECK(t.magnitude_ok);
  CHECK_FALSE(t.sign_ok.has_value());
}

TEST_CASE("torsion check on the family") {
  // the sign clause eta = -|T|/2 holds exactly when the oracle eta is negative
  for (const auto& f : testdata::rows("eta_family.txt")) {
    if (f[2] != "1")
      continue;
    ManifoldSpec s = family_spec(testdata::parse_counts(std::stoi(f[0]), f[1]));
    TorsionCheck t = eta_torsion_check(s);
    INFO(s.name);
    CHECK(t.magnitude_ok);
    REQUIRE(t.sign_ok.has_value());
    CHECK(*t.sign_ok == (std::stoll(f[4]) < 0));
  }
}

TEST_CASE("mod 2 cohomology") {
  ManifoldSpec s = family_spec(BlockSpec::from_j(3, {1, 3}));
  CHECK(cohomology_mod2_rank(s) == 5);
  CHECK(spin_structures(s) == 32);
}

}
