// The family of block-diagonal Z_{2^r}-manifolds: enumeration, dimension
// counts, attainable eta values with explicit witnesses, and the two tables.
#ifndef FLATETA_FAMILY_HPP_
#define FLATETA_FAMILY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eta.hpp"
#include "matrices.hpp"

namespace flateta {

int tau(std::uint64_t n);
std::int64_t n_r(int r);
std::int64_t n_rk(int r, int k);

// Number of partitions of m into powers of two, parts below max_part when given.
std::uint64_t binary_partitions(std::uint64_t m, std::optional<std::uint64_t> max_part = std::nullopt);

// j-tuples (j_{r-1}, ..., j_1) with sum 2^i j_i + 1 = n, j_1 odd, j_{r-1} >= 1.
std::vector<std::vector<int>> j_tuples(int n, int r);
std::uint64_t count_j_tuples(int n, int r);
int max_family_r(int n);

// All family members of dimension n, ordered by r and then lexicographically.
// With expand_cj every C/J split of the blocks with i >= 2 is listed.
std::vector<BlockSpec> enumerate_family(int n, std::optional<int> r = std::nullopt,
                                        bool expand_cj = false, bool parallel = true);

// Every family member with dimension <= n_max, by dimension.
std::vector<BlockSpec> family_up_to(int n_max, bool expand_cj);

struct EtaWitness {
  int exponent = 0;  // |eta| = 2^exponent
  BlockSpec blocks;
};

struct DimensionProfile {
  int n = 0;
  int tau = 0;
  int max_r = 0;
  std::vector<int> eta_exponents;
  std::vector<EtaWitness> witnesses;  // one per exponent
  ManifoldSpec zero_witness;          // a Z_{2^r}-manifold with eta = 0
};

DimensionProfile image_eta(int n);

// Minimal-dimension members with |eta| = 2^k, one per r in 2..r_max.
std::vector<ManifoldSpec> constant_eta_family(int k, int r_max);

struct Table1Row {
  int n = 0;
  std::string expansion;
  int tau = 0;
  int max_r = 0;
  std::vector<int> exponents;  // nonzero |eta| = 2^e, ascending
  std::string values() const;
};

std::vector<Table1Row> table_eta_by_dim(int n_max, bool parallel = true);
std::string render_table1(const std::vector<Table1Row>& rows);

struct Table3Row {
  int dim = 0;
  std::string partition;
  std::vector<int> J;  // counts of J_{top}, ..., J_1, J_0
  int r = 0;
  std::string F;
};

// Family members with |eta| = 2^k and dimension <= n_max (collapsed over C/J).
std::vector<Table3Row> table_eta_power(int k, int n_max);
inline std::vector<Table3Row> table_eta8(int n_max) { return table_eta_power(3, n_max); }
std::string render_table3(const std::vector<Table3Row>& rows);

}  // namespace flateta

#endif
