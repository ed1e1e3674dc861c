#include <doctest.h>

#include "flateta/linalg.hpp"
#include "flateta/matrices.hpp"

using namespace flateta;

TEST_SUITE("matrices") {

TEST_CASE("block orders and sizes") {
  for (int r = 1; r <= 5; ++r) {
    IntMatrix c = make_C(r), j = make_J(r);
    CHECK(c.rows() == (1u << r));
    CHECK(j.rows() == (1u << r));
    CHECK(matrix_order(c) == (1u << (r + 1)));
    CHECK(matrix_order(j) == (1u << (r + 1)));
    CHECK(fixed_dim(c) == 0);
    CHECK(fixed_dim(j) == 0);
    CHECK(determinant_sign(c) == 1);
    CHECK(is_signed_permutation(j));
    CHECK(is_orthogonal(c));
  }
  CHECK(make_C(1) == make_J(1));
  CHECK(matrix_order(make_J(0)) == 2);
}

TEST_CASE("J_2 layout") {
  IntMatrix j = make_J(2);
  IntMatrix expect = parse_int_matrix_rows({{0, 0, 0, -1}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(j == expect);
}

TEST_CASE("assembled generator") {
  BlockSpec s = BlockSpec::from_j(4, {1, 0, 1});
  CHECK(s.dimension() == 11);
  CHECK(s.total_blocks() == 2);
  CHECK(s.j_tuple_string() == "(1,0,1)");
  IntMatrix B = assemble_B(s);
  CHECK(B.rows() == 11);
  CHECK(matrix_order(B) == 16);
  CHECK(fixed_dim(B) == 1);
  CHECK(cycle_count(B) == 3);
}

TEST_CASE("rotation angles") {
  auto a = rotation_angles(assemble_B(BlockSpec::from_j(3, {1, 1})));
  REQUIRE(a.size() == 3);
  CHECK(to_string(a[0]) == "pi/4");
  CHECK(to_string(a[1]) == "3pi/4");
  CHECK(to_string(a[2]) == "pi/2");
}

TEST_CASE("invalid block specs") {
  BlockSpec even_j1 = BlockSpec::from_j(3, {1, 2});
  CHECK_THROWS_AS(even_j1.validate(), Error);
  CHECK_THROWS_AS(make_C(0), Error);
}

TEST_CASE("order cap and non-finite order") {
  IntMatrix shear = parse_int_matrix_rows({{1, 1}, {0, 1}});
  CHECK_THROWS_AS(matrix_order(shear), Error);
}

TEST_CASE("Smith normal form against sympy") {
  IntMatrix a = parse_int_matrix_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithForm f = smith_normal_form(to_big(a));
  CHECK(f.diagonal == std::vector<BigInt>{2, 6, 12});
  CHECK(mat_mul(mat_mul(f.U, to_big(a)), f.V) == f.D);
  IntMatrix b = parse_int_matrix_rows({{6, 0, 0, 0}, {0, 10, 0, 0}, {0, 0, 15, 0}});
  CHECK(smith_normal_form(to_big(b)).diagonal == std::vector<BigInt>{1, 30, 30});
}

}
