#include <doctest.h>

#include <fstream>
#include <sstream>

#include "flateta/family.hpp"

using namespace flateta;

TEST_SUITE("family") {

TEST_CASE("small counting functions") {
  CHECK(tau(3) == 2);
  CHECK(tau(63) == 6);
  CHECK(n_r(2) == 3);
  CHECK(n_r(3) == 7);
  CHECK(n_r(6) == 35);
  CHECK(n_rk(2, 4) == 11);
  CHECK(n_rk(3, 1) == 7);
  CHECK(n_rk(3, 3) == 11);
  CHECK(n_rk(7, 11) == 87);
  CHECK(n_rk(7, 10) == 87);
  CHECK_THROWS_AS(n_rk(2, 3), Error);
  CHECK(max_family_r(35) == 6);
  CHECK(max_family_r(31) == 5);
}

// OEIS A018819
TEST_CASE("binary partitions") {
  const std::uint64_t b[] = {1, 1, 2, 2, 4, 4, 6, 6, 10, 10, 14, 14, 20, 20, 26, 26, 36};
  for (int m = 0; m <= 16; ++m)
    CHECK(binary_partitions(m) == b[m]);
}

// Python enumeration of j-tuples with C/J splits
TEST_CASE("family sizes per dimension") {
  struct Row { int n; std::size_t collapsed, expanded; };
  const Row rows[] = {{3, 1, 1},     {7, 2, 3},     {11, 4, 8},    {15, 6, 16},   {19, 10, 32},
                      {23, 14, 56},  {27, 20, 96},  {31, 26, 152}, {35, 36, 240}, {39, 46, 360}};
  for (const Row& r : rows) {
    INFO("n=", r.n);
    CHECK(enumerate_family(r.n).size() == r.collapsed);
    CHECK(enumerate_family(r.n, std::nullopt, true).size() == r.expanded);
    CHECK(binary_partitions((r.n - 1) / 2) == r.collapsed);
  }
  CHECK(count_j_tuples(35, 4) == 16);
  CHECK(j_tuples(11, 3) == std::vector<std::vector<int>>{{1, 3}, {2, 1}});
}

TEST_CASE("serial and parallel enumeration agree") {
  CHECK(enumerate_family(31, std::nullopt, true, false) == enumerate_family(31, std::nullopt, true, true));
}

TEST_CASE("image of eta") {
  DimensionProfile p = image_eta(15);
  CHECK(p.tau == 4);
  CHECK(p.max_r == 4);
  CHECK(p.eta_exponents == std::vector<int>{2, 3, 4, 5, 6});
  for (const EtaWitness& w : p.witnesses)
    CHECK(std::llabs(eta_invariant(family_spec(w.blocks)).value()) == (std::int64_t(1) << w.exponent));
  CHECK(eta_invariant(p.zero_witness).value() == 0);
  CHECK(image_eta(3).eta_exponents == std::vector<int>{0});
}

TEST_CASE("constant eta families") {
  auto fam = constant_eta_family(3, 6);
  REQUIRE(fam.size() == 4);  // r = 2 cannot reach 2^3
  for (const ManifoldSpec& m : fam) {
    CHECK(std::llabs(eta_invariant(m).value()) == 8);
    CHECK(m.dimension() == n_rk(m.r, 3));
  }
}

TEST_CASE("table 1 golden") {
  std::ifstream in(std::string(FLATETA_GOLDEN_DIR) + "/table1.txt");
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(render_table1(table_eta_by_dim(63)) == golden.str());
  CHECK(render_table1(table_eta_by_dim(63, false)) == golden.str());
}

TEST_CASE("table 3 up to 31 golden") {
  std::ifstream in(std::string(FLATETA_GOLDEN_DIR) + "/table3.txt");
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(render_table3(table_eta8(31)) == golden.str());
}

TEST_CASE("table 3 up to 35 has the extra dimension-35 row") {
  auto rows = table_eta8(35);
  REQUIRE(rows.size() == 10);
  CHECK(rows.back().dim == 35);
  CHECK(rows.back().partition == "16+8+8+2+1");
  CHECK(rows.back().J == std::vector<int>{1, 2, 0, 1, 1});
  CHECK(rows.back().r == 5);
}

}
