#include "flateta/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "flateta/donnelly.hpp"
#include "flateta/family.hpp"
#include "flateta/homology.hpp"
#include "flateta/trig.hpp"

namespace flateta {

namespace {

class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checked;
    if (!ok && r_.failures.size() < 20)
      r_.failures.push_back(what);
    else if (!ok)
      r_.failures.back() = "... and more";
  }
  template<typename F>
  void guarded(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }

 private:
  SuiteResult& r_;
};

int sign_floor_half(std::int64_t ell) { return ((ell / 2) % 2) ? -1 : 1; }

void anchors(Checker& c) {
  ManifoldSpec t = tetracosm();
  c.guarded("tetracosm", [&] {
    c.check(eta_invariant(t).value() == -1, "tetracosm eta = -1");
    HolonomyData d = analyze(t);
    c.check(d.f_B == 2, "tetracosm f(B) = 2");
    EtaClosedForm cf = eta_closed_form(t);
    c.check(cf.sigma == -1 && cf.r == 2 && cf.nu == 0 && cf.lambda_sq == Rational(1),
            "tetracosm closed form scale 8 pi");
    c.check(eta_invariant_bruteforce(t).rounded == -1, "tetracosm cotangent sum");
    c.check(h1(t).str() == "Z + Z_2", "tetracosm H1");
    c.check(spin_structures(t) == 4, "tetracosm spin structures");
    c.check(eta_invariant(reverse_orientation(t)).value() == 1, "reversed tetracosm eta = +1");
    c.check(eta_invariant(generator_power(t, 3)).value() == -1, "generator gamma^3 keeps eta");
  });
  c.guarded("Z_8 fixture", [&] {
    ManifoldSpec z = nonstandard_z8();
    EtaInvariant e = eta_invariant(z);
    c.check(e.magnitude == 2 && !e.sign, "Z_8 fixture |eta| = 2 with unknown sign");
    c.check(h1(z).str() == "Z + Z_2^2", "Z_8 fixture H1");
    c.check(eta_invariant_bruteforce(z).rounded == 2, "Z_8 fixture cotangent sum");
  });
  bool rejected = false;
  try {
    validate(nonstandard_z8_literal());
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::NotTorsionFree;
  }
  c.check(rejected, "diag(K, J_1) on Z^7 with e_1/2 is rejected as not torsion free");
}

void oracle(Checker& c) {
  for (const BlockSpec& b : family_up_to(19, true))
    for (std::int64_t ell : {1, 3, 5, 7}) {
      ManifoldSpec s = family_spec(b, ell);
      c.guarded(s.name, [&] {
        EtaInvariant e = eta_invariant(s);
        BruteforceResult serial = eta_invariant_bruteforce(s, false);
        BruteforceResult par = eta_invariant_bruteforce(s, true);
        c.check(e.value() == serial.rounded && serial.residual < 1e-6,
                s.name + ": closed form " + e.str() + " vs cotangent sum " + std::to_string(serial.rounded));
        c.check(serial.raw == par.raw, s.name + ": serial and parallel sums differ");
        EtaInvariant e1 = eta_invariant(family_spec(b, 1));
        c.check(e.value() == sign_floor_half(ell) * e1.value(), s.name + ": ell twist");
        c.check(eta_invariant(reverse_orientation(s)).value() == -e.value(), s.name + ": orientation");
        double at0 = eta_closed_form(s).evaluate(Real(0)).convert_to<double>();
        c.check(std::abs(at0 - static_cast<double>(e.value())) < 1e-8, s.name + ": eta(0)");
      });
    }
}

void special_functions(Checker& c) {
  ensure_precision();
  for (int q : {2, 3, 4, 5, 8, 10})
    for (int p = 1; p <= q; ++p) {
      Real a = to_real(Rational(p, q));
      Real v = hurwitz_zeta(Real(0), a);
      c.check(abs(v - (Real(0.5) - a)) < Real(1e-12), "zeta(0, " + std::to_string(p) + "/" + std::to_string(q) + ")");
    }
  Real pi = real_pi();
  c.check(abs(hurwitz_zeta(Real(2), Real(1)) - pi * pi / 6) < Real(1e-12), "zeta(2, 1) = pi^2/6");
  c.check(abs(L_chi4(Real(1)) - pi / 4) < Real(1e-10), "L(1, chi_4) = pi/4");
  c.check(abs(L_chi4(Real(0)) - Real(0.5)) < Real(1e-12), "L(0, chi_4) = 1/2");
  for (double s : {-2.0, -1.0, -0.5, 0.0, 0.5, 2.0, 3.0}) {
    Real sr(s);
    Real diff = hurwitz_zeta(sr, Real(0.25)) - hurwitz_zeta(sr, Real(0.75));
    c.check(abs(pow(Real(4), sr) * L_chi4(sr) - diff) < Real(1e-10), "L reduction at s = " + std::to_string(s));
  }
  for (int nu = 0; nu <= 3; ++nu)
    for (double s : {0.5, 2.0}) {
      Real sr(s);
      c.check(abs(F_nu(nu, sr) - pow(Real(2), (nu + 2) * sr) * L_chi4(sr)) < Real(1e-10),
              "F_nu at nu = " + std::to_string(nu));
    }
}

void homology(Checker& c) {
  for (const BlockSpec& b : family_up_to(19, true)) {
    ManifoldSpec s = family_spec(b);
    c.guarded(s.name, [&] {
      H1Computation h = h1_detailed(s);
      c.check(h.snf_verified, s.name + ": U M V = D");
      c.check(h.group == h1_closed_form(b), s.name + ": H1 = " + h.group.str());
      TorsionCheck t = eta_torsion_check(s);
      c.check(t.magnitude_ok, s.name + ": |eta| = |T|/2 = #Spin/4 (" + t.detail() + ")");
      HolonomyData d = analyze(s);
      c.check(t.eta.value() == -*d.sigma_vB * (t.torsion_order / 2).convert_to<std::int64_t>(),
              s.name + ": eta = -sigma |T| / 2");
    });
  }
  c.guarded("Z_8 fixture", [&] {
    TorsionCheck t = eta_torsion_check(nonstandard_z8());
    c.check(t.magnitude_ok && t.torsion_order == 4, "Z_8 fixture |eta| = |T|/2");
  });
}

void donnelly(Checker& c) {
  for (const BlockSpec& b : family_up_to(15, true)) {
    ManifoldSpec s = family_spec(b);
    c.guarded(s.name, [&] {
      DonnellyReport rep = compare(s);
      c.check(rep.hypothesis.met, s.name + ": hypothesis");
      c.check(rep.ratio_ok.value_or(false), s.name + ": eta_Do = (-1)^(h+1) eta");
      int h = (s.dimension() + 1) / 4;
      HolonomyData d = analyze(s);
      std::int64_t mag = std::int64_t(1) << (b.total_blocks() - 1);
      std::int64_t expect = ((h % 2) ? -1 : 1) * *d.sigma_vB * mag;
      c.check(rep.eta_do && rep.eta_do->exact == Rational(expect), s.name + ": eta_Do = (-1)^h sigma 2^(sum j - 1)");
      for (std::int64_t ell : {3, 5, 7}) {
        DonnellyValue v = eta_donnelly(family_spec(b, ell), true);
        c.check(v.exact == Rational(sign_floor_half(ell) * expect), s.name + ": ell twist");
      }
    });
  }
  TriscosmReport t = triscosm();
  c.check(!t.hypothesis.met, "triscosm hypothesis fails");
  c.check(abs(t.forced.raw + Real(4) / 9) < Real(1e-10), "triscosm forced value -4/9");
  c.check(t.eta_true_exact == Rational(-2, 3), "triscosm eta = -2/3");
}

void identities(Checker& c) {
  for (const IdentityCheck& r : identity_suite(IdentitySuiteOptions{}, true))
    c.check(r.ok, r.identity + " " + r.params);
}

std::set<int> formula_exponents(int n) {
  int m = (n - 1) / 2;
  std::set<int> e;
  for (int k = tau(static_cast<std::uint64_t>(n)) - 2; k <= m - 1; ++k)
    e.insert(k);
  return e;
}

void image(Checker& c) {
  for (int n = 3; n <= 35; n += 4) {
    c.guarded("n = " + std::to_string(n), [&] {
      DimensionProfile p = image_eta(n);
      std::set<int> expect = formula_exponents(n);
      c.check(std::set<int>(p.eta_exponents.begin(), p.eta_exponents.end()) == expect,
              "exponent set in dimension " + std::to_string(n));
      for (const EtaWitness& w : p.witnesses) {
        ManifoldSpec s = family_spec(w.blocks);
        c.check(s.dimension() == n && eta_invariant(s).magnitude == (std::int64_t(1) << w.exponent),
                "witness " + s.name);
      }
      c.check(eta_invariant(p.zero_witness).magnitude == 0, "eta = 0 witness in dimension " + std::to_string(n));
      for (const BlockSpec& b : enumerate_family(n)) {
        int e = f_of_B(assemble_B(b)) - 2;
        c.check(expect.count(e) == 1, "exponent of " + b.j_tuple_string() + " in dimension " + std::to_string(n));
        c.check((e == 0) == (n == 3), "|eta| = 1 only in dimension 3");
      }
    });
  }
}

void minimality(Checker& c) {
  std::map<std::pair<int, int>, int> least;  // (r, k) -> least dimension
  for (int n = 3; n <= 35; n += 4)
    for (const BlockSpec& b : enumerate_family(n)) {
      int k = f_of_B(assemble_B(b)) - 2;
      auto key = std::make_pair(b.r, k);
      if (!least.count(key))
        least[key] = n;
    }
  for (auto [key, n] : least) {
    auto [r, k] = key;
    c.guarded("n_rk", [&] {
      c.check(n == n_rk(r, k), "least dimension for r = " + std::to_string(r) + ", |eta| = 2^" +
                                   std::to_string(k) + " is " + std::to_string(n));
    });
  }
  for (int r = 3; r <= 5; ++r) {
    int best = 1 << 30;
    for (auto [key, n] : least)
      if (key.first == r)
        best = std::min(best, n);
    c.check(best == n_r(r), "n_r(" + std::to_string(r) + ") is the least dimension");
  }
  for (int k = 1; k <= 6; ++k)
    for (const ManifoldSpec& s : constant_eta_family(k, 5))
      c.guarded(s.name, [&] {
        c.check(eta_invariant(s).magnitude == (std::int64_t(1) << k), s.name + ": |eta| = 2^k");
        c.check(s.dimension() == n_rk(s.blocks->r, k), s.name + ": minimal dimension");
      });
}

void counts(Checker& c) {
  c.check(enumerate_family(3, std::nullopt, true).size() == 1, "one family member in dimension 3");
  c.check(enumerate_family(7, std::nullopt, true).size() == 3, "three family members in dimension 7");
  c.check(enumerate_family(11, std::nullopt, true).size() == 8, "eight family members in dimension 11");
  for (int n = 3; n <= 43; n += 4) {
    std::uint64_t sum = 0;
    for (int r = 2; r <= max_family_r(n); ++r) {
      // Oracle: coefficient count by dynamic programming over block sizes.
      std::vector<std::uint64_t> ways(static_cast<std::size_t>(n), 0);
      for (int j1 = 1; 2 * j1 <= n - 1; j1 += 2)
        ways[static_cast<std::size_t>(2 * j1)] += 1;
      for (int i = 2; i <= r - 1; ++i) {
        std::vector<std::uint64_t> next(ways.size(), 0);
        for (std::size_t v = 0; v < ways.size(); ++v)
          for (int j = (i == r - 1 ? 1 : 0); v + static_cast<std::size_t>(j << i) < ways.size(); ++j)
            next[v + static_cast<std::size_t>(j << i)] += ways[v];
        ways = next;
      }
      std::uint64_t expect = ways[static_cast<std::size_t>(n - 1)];
      c.check(count_j_tuples(n, r) == expect,
              "j-tuple count for n = " + std::to_string(n) + ", r = " + std::to_string(r));
      sum += count_j_tuples(n, r);
    }
    c.check(enumerate_family(n).size() == sum, "enumeration length in dimension " + std::to_string(n));
  }
  c.check(binary_partitions(4) == 4, "binary partitions of 4");
}

void tables(Checker& c) {
  for (const Table1Row& row : table_eta_by_dim(63)) {
    std::set<int> got(row.exponents.begin(), row.exponents.end());
    c.check(got == formula_exponents(row.n), "table row " + row.expansion);
    c.check(row.max_r == max_family_r(row.n), "max r for " + row.expansion);
  }
  for (const Table3Row& row : table_eta8(35))
    c.check(row.dim <= 35, "table of |eta| = 8 stays below the bound");
}

const std::vector<std::pair<std::string, std::function<void(Checker&)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<void(Checker&)>>> all = {
      {"anchors", anchors},       {"oracle", oracle},
      {"special-functions", special_functions},
      {"homology", homology},     {"donnelly", donnelly},
      {"identities", identities}, {"image", image},
      {"minimality", minimality}, {"counts", counts},
      {"tables", tables},
  };
  return all;
}

}  // namespace

std::vector<std::string> selftest_suite_names() {
  std::vector<std::string> names;
  for (const auto& s : suites())
    names.push_back(s.first);
  return names;
}

SuiteResult run_selftest_suite(const std::string& name) {
  for (const auto& [n, fn] : suites()) {
    if (n != name)
      continue;
    SuiteResult r;
    r.name = n;
    Checker c(r);
    auto t0 = std::chrono::steady_clock::now();
    c.guarded(n, [&] { fn(c); });
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw Error(ErrorCode::InvalidSpec, "unknown selftest suite " + name);
}

std::vector<SuiteResult> run_selftest() {
  std::vector<SuiteResult> out;
  for (const std::string& n : selftest_suite_names())
    out.push_back(run_selftest_suite(n));
  return out;
}

}  // namespace flateta
