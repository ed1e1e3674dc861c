#include "flateta/matrices.hpp"

#include <numeric>

#include "flateta/charpoly.hpp"
#include "flateta/linalg.hpp"

namespace flateta {

int BlockSpec::j(int i) const {
  for (const BlockCount& c : counts)
    if (c.i == i)
      return c.j();
  return 0;
}

int BlockSpec::total_blocks() const {
  int t = 0;
  for (const BlockCount& c : counts)
    t += c.j();
  return t;
}

int BlockSpec::dimension() const {
  int n = 1;
  for (const BlockCount& c : counts)
    n += (1 << c.i) * c.j();
  return n;
}

void BlockSpec::validate() const {
  if (r < 2)
    throw Error(ErrorCode::InvalidSpec, "block spec needs r >= 2");
  if (r > 16)
    throw Error(ErrorCode::InvalidSpec, "block spec r is too large");
  if (counts.size() != static_cast<std::size_t>(r - 1))
    throw Error(ErrorCode::InvalidSpec, "block spec needs one entry per i = r-1..1");
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const BlockCount& c = counts[k];
    if (c.i != r - 1 - static_cast<int>(k))
      throw Error(ErrorCode::InvalidSpec, "block entries must be ordered i = r-1..1");
    if (c.C < 0 || c.J < 0)
      throw Error(ErrorCode::InvalidSpec, "negative block count");
    if (c.i == 1 && c.J != 0)
      throw Error(ErrorCode::InvalidSpec, "J_1 equals C_1; give i = 1 blocks as C");
  }
  if (j(r - 1) < 1)
    throw Error(ErrorCode::InvalidSpec, "need at least one block of size 2^(r-1)");
  if (j(1) % 2 == 0)
    throw Error(ErrorCode::BadParity, "j_1 must be odd");
}

std::string BlockSpec::j_tuple_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k)
      s += ",";
    s += std::to_string(counts[k].j());
  }
  return s + ")";
}

BlockSpec BlockSpec::from_j(int r, const std::vector<int>& j_desc) {
  BlockSpec s;
  s.r = r;
  for (std::size_t k = 0; k < j_desc.size(); ++k) {
    BlockCount c;
    c.i = r - 1 - static_cast<int>(k);
    if (c.i == 1)
      c.C = j_desc[k];
    else
      c.J = j_desc[k];
    s.counts.push_back(c);
  }
  return s;
}

std::string to_string(const AngleRational& a) {
  std::string s = a.num == 1 ? "pi" : std::to_string(a.num) + "pi";
  if (a.den != 1)
    s += "/" + std::to_string(a.den);
  return s;
}

IntMatrix make_C(int r) {
  if (r < 1 || r > 12)
    throw Error(ErrorCode::InvalidSpec, "make_C needs 1 <= r <= 12");
  std::size_t n = std::size_t(1) << r;
  IntMatrix c(n, n);
  c(0, n - 1) = -1;
  for (std::size_t i = 0; i + 1 < n; ++i)
    c(i + 1, i) = 1;
  return c;
}

IntMatrix make_J(int r) {
  if (r < 0 || r > 12)
    throw Error(ErrorCode::InvalidSpec, "make_J needs 0 <= r <= 12");
  if (r == 0) {
    IntMatrix j(1, 1);
    j(0, 0) = -1;
    return j;
  }
  IntMatrix prev = make_J(r - 1);
  std::size_t h = prev.rows();
  IntMatrix j(2 * h, 2 * h);
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t b = 0; b < h; ++b)
      j(a, h + b) = prev(a, b);
    j(h + a, a) = 1;
  }
  return j;
}

IntMatrix assemble_B(const BlockSpec& spec) {
  spec.validate();
  std::vector<IntMatrix> blocks;
  for (const BlockCount& c : spec.counts) {
    for (int k = 0; k < c.C; ++k)
      blocks.push_back(make_C(c.i));
    for (int k = 0; k < c.J; ++k)
      blocks.push_back(make_J(c.i));
  }
  blocks.push_back(IntMatrix::identity(1));
  return block_diag(blocks);
}

std::uint64_t matrix_order(const IntMatrix& b) {
  if (!b.is_square() || b.rows() == 0)
    throw Error(ErrorCode::InvalidSpec, "order of a non-square matrix");
  IntMatrix id = IntMatrix::identity(b.rows());
  IntMatrix p = b;
  try {
    for (std::uint64_t k = 1; k <= kOrderCap; ++k) {
      if (p == id)
        return k;
      p = multiply(p, b);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow)
      throw;
  }
  throw Error(ErrorCode::NotFiniteOrder, "no power up to 2^16 is the identity");
}

int fixed_dim(const IntMatrix& b) {
  return static_cast<int>(b.rows() - rank(add_identity(b, -1)));
}

int determinant_sign(const IntMatrix& b) {
  BigInt d = determinant(to_big(b));
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

bool is_signed_permutation(const IntMatrix& b) {
  if (!b.is_square())
    return false;
  std::size_t n = b.rows();
  std::vector<int> col_hits(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int row_hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = b(i, j);
      if (v == 0)
        continue;
      if (v != 1 && v != -1)
        return false;
      ++row_hits;
      ++col_hits[j];
    }
    if (row_hits != 1)
      return false;
  }
  for (int h : col_hits)
    if (h != 1)
      return false;
  return true;
}

bool is_orthogonal(const IntMatrix& b) {
  return b.is_square() && multiply(b.transposed(), b) == IntMatrix::identity(b.rows());
}

int cycle_count(const IntMatrix& b) {
  if (!is_signed_permutation(b))
    throw Error(ErrorCode::NotSignedPermutation, "matrix is not a signed permutation");
  std::size_t n = b.rows();
  std::vector<std::size_t> image(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (b(i, j) != 0)
        image[j] = i;
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    ++cycles;
    for (std::size_t k = s; !seen[k]; k = image[k])
      seen[k] = true;
  }
  return cycles;
}

std::vector<AngleRational> rotation_angles(const IntMatrix& b) {
  CyclotomicFactorization f = cyclotomic_factor(char_poly(b));
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
  int c2 = f.c(2);
  if (c2 % 2 != 0)
    throw Error(ErrorCode::InvalidSpec, "odd multiplicity of eigenvalue -1: not orientation preserving");
  for (int m = 0; m < c2 / 2; ++m)
    angles.push_back({1, 1});
  return angles;
}

IntMatrix parse_int_matrix_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t n = rows.size();
  if (n == 0)
    throw Error(ErrorCode::InvalidSpec, "empty matrix");
  IntMatrix m(n, rows[0].size());
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m.cols())
      throw Error(ErrorCode::InvalidSpec, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j)
        s += ",";
      s += std::to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace flateta
