#include "flateta/family.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>

namespace flateta {

namespace {

void require_dimension(int n) {
  if (n < 3 || n % 4 != 3)
    throw Error(ErrorCode::BadDimension, "dimension " + std::to_string(n) + " is not 3 mod 4");
}

// Block multiset keyed by i (block size 2^i), as a collapsed block spec.
BlockSpec from_counts(const std::map<int, int>& cnt) {
  int top = 1;
  for (auto [i, c] : cnt)
    if (c > 0)
      top = std::max(top, i);
  std::vector<int> j_desc;
  for (int i = top; i >= 1; --i) {
    auto it = cnt.find(i);
    j_desc.push_back(it == cnt.end() ? 0 : it->second);
  }
  return BlockSpec::from_j(top + 1, j_desc);
}

int sum_j(const std::vector<int>& j) {
  int s = 0;
  for (int x : j)
    s += x;
  return s;
}

std::vector<BlockSpec> expand_variants(const BlockSpec& base) {
  std::vector<BlockSpec> out{base};
  for (std::size_t k = 0; k < base.counts.size(); ++k) {
    int total = base.counts[k].j();
    if (base.counts[k].i == 1 || total == 0)
      continue;
    std::vector<BlockSpec> next;
    for (const BlockSpec& s : out)
      for (int c = 0; c <= total; ++c) {
        BlockSpec v = s;
        v.counts[k].C = c;
        v.counts[k].J = total - c;
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

std::string power_string(int e) {
  if (e == 0)
    return "1";
  if (e == 1)
    return "2";
  return "2^" + std::to_string(e);
}

}  // namespace

int tau(std::uint64_t n) { return std::popcount(n); }

std::int64_t n_r(int r) {
  if (r < 2 || r > 62)
    throw Error(ErrorCode::InvalidSpec, "n_r needs 2 <= r <= 62");
  if (r == 2)
    return 3;
  return (std::int64_t(1) << (r - 1)) + 3;
}

std::int64_t n_rk(int r, int k) {
  if (k < 0)
    throw Error(ErrorCode::InvalidSpec, "k must be non-negative");
  if (r == 2) {
    if (k % 2)
      throw Error(ErrorCode::Unattainable, "Z_4-manifolds only reach |eta| = 2^k for even k");
    return 3 + 2 * static_cast<std::int64_t>(k);
  }
  if (k == 0)
    throw Error(ErrorCode::Unattainable, "|eta| = 1 needs r = 2");
  return n_r(r) + 4 * static_cast<std::int64_t>(k / 2);
}

std::uint64_t binary_partitions(std::uint64_t m, std::optional<std::uint64_t> max_part) {
  std::vector<std::uint64_t> ways(m + 1, 0);
  ways[0] = 1;
  for (std::uint64_t p = 1; p <= m; p <<= 1) {
    if (max_part && p >= *max_part)
      break;
    for (std::uint64_t s = p; s <= m; ++s)
      ways[s] += ways[s - p];
  }
  return ways[m];
}

std::vector<std::vector<int>> j_tuples(int n, int r) {
  require_dimension(n);
  std::vector<std::vector<int>> out;
  if (r < 2 || r > 30)
    return out;
  std::vector<int> cur(r - 1, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    std::size_t k = static_cast<std::size_t>(r - 1 - i);
    if (i == 1) {
      if (remaining % 2 == 0 && (remaining / 2) % 2 == 1) {
        cur[k] = remaining / 2;
        out.push_back(cur);
      }
      return;
    }
    int size = 1 << i;
    for (int j = (i == r - 1 ? 1 : 0); j * size <= remaining; ++j) {
      cur[k] = j;
      rec(i - 1, remaining - j * size);
    }
  };
  rec(r - 1, n - 1);
  return out;
}

std::uint64_t count_j_tuples(int n, int r) { return j_tuples(n, r).size(); }

int max_family_r(int n) {
  require_dimension(n);
  int r = 2;
  while (r < 30 && n_r(r + 1) <= n)
    ++r;
  return r;
}

std::vector<BlockSpec> enumerate_family(int n, std::optional<int> r, bool expand_cj, bool parallel) {
  require_dimension(n);
  int lo = r ? *r : 2;
  int hi = r ? *r : max_family_r(n);
  if (lo < 2)
    return {};
  std::vector<std::vector<BlockSpec>> per_r(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
  long count = static_cast<long>(per_r.size());
  auto fill = [&](long idx) {
    int rr = lo + static_cast<int>(idx);
    for (const auto& j : j_tuples(n, rr)) {
      BlockSpec s = BlockSpec::from_j(rr, j);
      if (expand_cj)
        for (BlockSpec& v : expand_variants(s))
          per_r[idx].push_back(std::move(v));
      else
        per_r[idx].push_back(std::move(s));
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < count; ++idx)
      fill(idx);
  } else {
    for (long idx = 0; idx < count; ++idx)
      fill(idx);
  }
  std::vector<BlockSpec> out;
  for (auto& v : per_r)
    for (auto& s : v)
      out.push_back(std::move(s));
  return out;
}

std::vector<BlockSpec> family_up_to(int n_max, bool expand_cj) {
  std::vector<BlockSpec> out;
  for (int n = 3; n <= n_max; n += 4)
    for (BlockSpec& s : enumerate_family(n, std::nullopt, expand_cj))
      out.push_back(std::move(s));
  return out;
}

DimensionProfile image_eta(int n) {
  require_dimension(n);
  DimensionProfile p;
  p.n = n;
  p.tau = tau(static_cast<std::uint64_t>(n));
  p.max_r = max_family_r(n);

  // Start from one block per binary digit of n - 1, then split the largest
  // block of size at least 4 until only J_1 blocks remain.
  std::map<int, int> cnt;
  for (int i = 1; (1 << i) <= n - 1; ++i)
    if ((n - 1) & (1 << i))
      cnt[i] = 1;
  while (true) {
    BlockSpec s = from_counts(cnt);
    p.eta_exponents.push_back(s.total_blocks() - 1);
    p.witnesses.push_back({s.total_blocks() - 1, s});
    int top = 0;
    for (auto [i, c] : cnt)
      if (c > 0 && i >= 2)
        top = std::max(top, i);
    if (top == 0)
      break;
    --cnt[top];
    cnt[top - 1] += 2;
  }

  // eta = 0: the first witness with one J_1 block replaced by -I_2.
  BlockSpec first = p.witnesses.front().blocks;
  ManifoldSpec z = family_spec(first);
  int m = z.dimension();
  IntMatrix B = z.B;
  // The i = 1 blocks sit just before the trailing 1.
  std::size_t at = static_cast<std::size_t>(m - 3);
  B(at, at) = -1;
  B(at, at + 1) = 0;
  B(at + 1, at) = 0;
  B(at + 1, at + 1) = -1;
  z.B = B;
  z.b[static_cast<std::size_t>(m - 1)] = Rational(1, static_cast<long long>(matrix_order(B)));
  z.blocks.reset();
  z.r = 0;
  z.name = "eta-zero-" + std::to_string(n);
  p.zero_witness = z;
  return p;
}

std::vector<ManifoldSpec> constant_eta_family(int k, int r_max) {
  if (k < 1)
    throw Error(ErrorCode::InvalidSpec, "k must be at least 1");
  std::vector<ManifoldSpec> out;
  for (int r = 2; r <= r_max; ++r) {
    std::map<int, int> cnt;
    if (r == 2) {
      if (k % 2)
        continue;
      cnt[1] = k + 1;
    } else if (k % 2) {
      cnt[r - 1] += 1;
      cnt[1] += k;
    } else {
      cnt[r - 1] += 1;
      cnt[2] += 1;
      cnt[1] += k - 1;
    }
    out.push_back(family_spec(from_counts(cnt)));
  }
  if (out.empty())
    throw Error(ErrorCode::Unattainable, "no Z_{2^r}-manifold with r <= " + std::to_string(r_max) +
                                             " has |eta| = 2^" + std::to_string(k));
  return out;
}

std::string Table1Row::values() const {
  std::string s = "0";
  if (exponents.size() <= 5) {
    for (int e : exponents)
      s += ", " + power_string(e);
    return s;
  }
  s += ", " + power_string(exponents[0]) + ", " + power_string(exponents[1]) + ", ..., " +
       power_string(exponents.back());
  return s;
}

std::vector<Table1Row> table_eta_by_dim(int n_max, bool parallel) {
  std::vector<Table1Row> rows;
  for (int n = 3; n <= n_max; n += 4)
    rows.push_back({n, "", 0, 0, {}});
  long count = static_cast<long>(rows.size());
  auto fill = [&](long idx) {
    Table1Row& row = rows[idx];
    int n = row.n;
    row.tau = tau(static_cast<std::uint64_t>(n));
    std::vector<int> exps;
    for (int r = 2; r <= max_family_r(n); ++r) {
      auto tuples = j_tuples(n, r);
      if (!tuples.empty())
        row.max_r = r;
      for (const auto& j : tuples)
        exps.push_back(sum_j(j) - 1);
    }
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    row.exponents = exps;
    std::string e = std::to_string(n) + "=";
    bool first = true;
    for (int b = 30; b >= 0; --b)
      if (n & (1 << b)) {
        e += (first ? "" : "+") + std::to_string(1 << b);
        first = false;
      }
    for (int r = 2; n_r(r) <= n; ++r)
      if (n_r(r) == n)
        e += "=n_" + std::to_string(r);
    row.expansion = e;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < count; ++idx)
      fill(idx);
  } else {
    for (long idx = 0; idx < count; ++idx)
      fill(idx);
  }
  return rows;
}

namespace {

std::string pad_left(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace

std::string render_table1(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << pad_right("dimension n", 24) << pad_left("tau", 5) << pad_left("max r", 7)
      << "  eta-invariant\n";
  for (const Table1Row& r : rows)
    out << pad_right(r.expansion, 24) << pad_left(std::to_string(r.tau), 5)
        << pad_left(std::to_string(r.max_r), 7) << "  " << r.values() << "\n";
  return out.str();
}

std::vector<Table3Row> table_eta_power(int k, int n_max) {
  struct Found {
    int dim, r;
    std::vector<int> j;
  };
  std::vector<Found> found;
  int top = 4;
  for (int n = 3; n <= n_max; n += 4)
    for (int r = 2; r <= max_family_r(n); ++r)
      for (const auto& j : j_tuples(n, r))
        if (sum_j(j) - 1 == k) {
          found.push_back({n, r, j});
          top = std::max(top, r - 1);
        }
  std::stable_sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.r < b.r;
  });
  std::vector<Table3Row> rows;
  for (const Found& f : found) {
    Table3Row row;
    row.dim = f.dim;
    row.r = f.r;
    row.F = "Z_" + std::to_string(std::int64_t(1) << f.r);
    row.J.assign(static_cast<std::size_t>(top + 1), 0);
    std::string part;
    for (std::size_t idx = 0; idx < f.j.size(); ++idx) {
      int i = f.r - 1 - static_cast<int>(idx);
      row.J[static_cast<std::size_t>(top - i)] = f.j[idx];
      for (int c = 0; c < f.j[idx]; ++c)
        part += std::to_string(1 << i) + "+";
    }
    row.J.back() = 1;
    row.partition = part + "1";
    rows.push_back(row);
  }
  return rows;
}

std::string render_table3(const std::vector<Table3Row>& rows) {
  std::size_t width = rows.empty() ? 5 : rows.front().J.size();
  std::ostringstream out;
  out << pad_left("dim", 3) << "  " << pad_right("partition of n", 20);
  for (std::size_t c = 0; c < width; ++c)
    out << pad_left("J" + std::to_string(width - 1 - c), 4);
  out << pad_left("r", 4) << "  F\n";
  for (const Table3Row& r : rows) {
    out << pad_left(std::to_string(r.dim), 3) << "  " << pad_right(r.partition, 20);
    for (int c : r.J)
      out << pad_left(std::to_string(c), 4);
    out << pad_left(std::to_string(r.r), 4) << "  " << r.F << "\n";
  }
  return out.str();
}

}  // namespace flateta
