// Holonomy matrices: the blocks C_r and J_r, block assemblies, and basic
// invariants (order, fixed dimension, cycle count, rotation angles).
#ifndef FLATETA_MATRICES_HPP_
#define FLATETA_MATRICES_HPP_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace flateta {

// Counts of C_i and J_i blocks for one block size 2^i.
struct BlockCount {
  int i = 1;
  int C = 0;
  int J = 0;
  int j() const { return C + J; }
  bool operator==(const BlockCount&) const = default;
};

// Block assembly for a Z_{2^r} holonomy generator.  counts holds one entry
// per i = r-1, ..., 1 (in that order).  J_1 equals C_1, so the i = 1 entry
// always stores its blocks as C.
struct BlockSpec {
  int r = 2;
  std::vector<BlockCount> counts;

  // j_i for 1 <= i <= r-1; zero outside that range.
  int j(int i) const;
  int total_blocks() const;  // sum of j_i
  int dimension() const;     // sum 2^i j_i + 1
  void validate() const;
  std::string j_tuple_string() const;  // "(j_{r-1},...,j_1)"
  bool operator==(const BlockSpec&) const = default;

  // Collapsed representative: J blocks for every i >= 2, C_1 for i = 1.
  static BlockSpec from_j(int r, const std::vector<int>& j_desc);
};

// An angle p*pi/q with 0 < p/q <= 1, reduced.
struct AngleRational {
  std::int64_t num = 1;
  std::int64_t den = 1;
  Rational value() const { return Rational(num, den); }  // in units of pi
  bool operator==(const AngleRational&) const = default;
  std::strong_ordering operator<=>(const AngleRational& o) const {
    return num * o.den <=> o.num * den;
  }
};

std::string to_string(const AngleRational& a);

IntMatrix make_C(int r);
IntMatrix make_J(int r);
IntMatrix assemble_B(const BlockSpec& spec);

constexpr std::uint64_t kOrderCap = 1u << 16;

std::uint64_t matrix_order(const IntMatrix& b);
int fixed_dim(const IntMatrix& b);
int determinant_sign(const IntMatrix& b);
bool is_signed_permutation(const IntMatrix& b);
bool is_orthogonal(const IntMatrix& b);
int cycle_count(const IntMatrix& b);

// Multiset of angles t_j in (0, pi], ascending by numerator within each
// denominator and descending by denominator, derived from the cyclotomic
// exponents of the characteristic polynomial.
std::vector<AngleRational> rotation_angles(const IntMatrix& b);

IntMatrix parse_int_matrix_rows(const std::vector<std::vector<std::int64_t>>& rows);
std::string to_string(const IntMatrix& m);

}  // namespace flateta

#endif
