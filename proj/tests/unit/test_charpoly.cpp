#include <doctest.h>

#include "flateta/charpoly.hpp"
#include "flateta/matrices.hpp"

using namespace flateta;

TEST_SUITE("charpoly") {

TEST_CASE("Berkowitz against sympy") {
  IntMatrix m = parse_int_matrix_rows({{2, 1, 0, 3}, {-1, 3, 4, 0}, {5, 0, -2, 1}, {1, 1, 1, 1}});
  IntPolynomial p = char_poly(m);
  CHECK(p.coeffs == std::vector<BigInt>{12, -11, -4, -4, 1});
}

TEST_CASE("blocks are cyclotomic") {
  for (int r = 1; r <= 6; ++r) {
    IntPolynomial expect = cyclotomic_two_power(std::uint64_t(1) << (r + 1));
    CHECK(char_poly(make_C(r)) == expect);
    CHECK(char_poly(make_J(r)) == expect);
  }
}

TEST_CASE("factorisation of a family generator") {
  IntMatrix B = assemble_B(BlockSpec::from_j(4, {1, 2, 1}));
  CyclotomicFactorization f = cyclotomic_factor(char_poly(B));
  CHECK(f.c(1) == 1);
  CHECK(f.c(4) == 1);
  CHECK(f.c(8) == 2);
  CHECK(f.c(16) == 1);
  CHECK(f.factor_count() == 5);
  CHECK(f.r == 4);
  CHECK(f.expand() == char_poly(B));
  CHECK(f_of_B(B) == 5);
}

TEST_CASE("tetracosm polynomial") {
  IntMatrix B = parse_int_matrix_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK(to_string(char_poly(B)) == "x^3 - x^2 + x - 1");
  CHECK(f_of_B(B) == 2);
}

TEST_CASE("non-cyclotomic input") {
  IntMatrix m = parse_int_matrix_rows({{2, 1}, {1, 1}});
  CHECK_THROWS_AS(cyclotomic_factor(char_poly(m)), Error);
}

}
