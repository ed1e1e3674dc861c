#include "flateta/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flateta/charpoly.hpp"
#include "flateta/donnelly.hpp"
#include "flateta/family.hpp"
#include "flateta/homology.hpp"
#include "flateta/selftest.hpp"
#include "flateta/spec_io.hpp"
#include "flateta/trig.hpp"

namespace flateta {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpecSource {
  std::string file;
  bool tetracosm = false;
  bool nonstandard_z8 = false;
  bool triscosm = false;

  void add_to(CLI::App* cmd, bool allow_triscosm) {
    cmd->add_option("--spec", file, "Spec file (JSON)");
    cmd->add_flag("--tetracosm", tetracosm, "Use the 3-dimensional Z_4-manifold");
    cmd->add_flag("--nonstandard-z8", nonstandard_z8, "Use the 7-dimensional Z_8 fixture outside the family");
    if (allow_triscosm)
      cmd->add_flag("--triscosm", triscosm, "Use the 3-dimensional Z_3-manifold");
  }

  int count() const {
    return static_cast<int>(!file.empty()) + tetracosm + nonstandard_z8 + triscosm;
  }

  ManifoldSpec resolve() const {
    if (count() != 1)
      throw UsageError("give exactly one spec source (--spec, --tetracosm, --nonstandard-z8)");
    if (tetracosm)
      return flateta::tetracosm();
    if (nonstandard_z8)
      return flateta::nonstandard_z8();
    try {
      return load_spec_file(file);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidSpec || e.code() == ErrorCode::BadParity)
        throw UsageError(e.what());
      throw;
    }
  }
};

std::vector<double> parse_s_values(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--s expects comma separated numbers, got '" + item + "'");
    }
  }
  return out;
}

std::string fmt(double x, int digits = 17) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

std::string signed_str(int s) { return s > 0 ? "+1" : "-1"; }

// ---- eta ----------------------------------------------------------------

struct EtaOptions {
  SpecSource src;
  std::string s_values;
  std::string sign = "both";
  bool json = false;
};

int cmd_triscosm_eta(const EtaOptions& o, std::ostream& out) {
  TriscosmReport t = triscosm();
  if (o.json) {
    Json j;
    j["name"] = "triscosm";
    j["n"] = 3;
    j["holonomy_order"] = 3;
    j["eta"] = rational_json(*t.eta_true_exact);
    j["eta_numeric"] = to_double(t.eta_true);
    out << dump_json(j);
  } else {
    out << "manifold: triscosm (n = 3, holonomy Z_3)\n";
    out << "eta = " << to_string(*t.eta_true_exact) << "  (cotangent sum " << fmt(to_double(t.eta_true)) << ")\n";
  }
  return 0;
}

int cmd_eta(const EtaOptions& o, std::ostream& out) {
  if (o.src.triscosm)
    return cmd_triscosm_eta(o, out);
  if (o.sign != "both" && o.sign != "convention")
    throw UsageError("--sign must be 'both' or 'convention'");
  ManifoldSpec spec = o.src.resolve();
  std::vector<double> svals = parse_s_values(o.s_values);
  SpecChecks checks = validate(spec);
  EtaInvariant e = eta_invariant(spec);
  EtaClosedForm cf = eta_closed_form(spec);
  BruteforceResult bf = eta_invariant_bruteforce(spec, true);

  std::optional<HolonomyData> data;
  if (!cf.zero || fixed_dim(spec.B) == 1)
    if (checks.r >= 2)
      data = analyze(spec);

  bool assumed = false;
  std::optional<int> sign = e.sign;
  std::optional<int> cf_sigma = cf.sigma;
  if (e.magnitude != 0 && !sign && o.sign == "convention" && data) {
    // Take the given lattice basis as positively oriented.
    int sv = data->sigma_coordinates;
    int twist = (data->ell_odd % 4 == 1) ? 1 : -1;
    sign = -sv * twist;
    cf_sigma = sign;
    assumed = true;
  }
  bool both = e.magnitude != 0 && !sign;
  std::string eta_text = e.magnitude == 0 ? "0"
                         : both           ? "+-" + std::to_string(e.magnitude)
                                          : std::to_string(*sign * e.magnitude);
  std::int64_t bf_value = bf.rounded;
  if (assumed)
    bf_value = Real(round(bf.raw)).convert_to<std::int64_t>();
  if (both && bf_value < 0)
    bf_value = -bf_value;

  EtaClosedForm eval = cf;
  eval.sigma = cf_sigma;
  std::vector<std::pair<double, std::optional<double>>> etas;
  for (double s : svals) {
    std::optional<double> v;
    if (!eval.zero && !eval.lambda_sq && s != 0)
      v = std::nullopt;
    else
      v = to_double(eval.evaluate(Real(s)));
    if (v && both)
      v = std::abs(*v);
    etas.push_back({s, v});
  }

  if (o.json) {
    Json j;
    j["name"] = spec.name;
    j["n"] = spec.dimension();
    j["r"] = checks.r;
    j["sign_mode"] = both ? "both" : "convention";
    j["orientation_assumed"] = assumed;
    if (both && e.magnitude != 0)
      j["eta"] = nullptr;
    else
      j["eta"] = e.magnitude == 0 ? 0 : *sign * e.magnitude;
    j["eta_magnitude"] = e.magnitude;
    Json c;
    c["zero"] = cf.zero;
    c["f_B"] = cf.f_B;
    c["r"] = cf.r;
    c["nu"] = cf.nu;
    c["sigma"] = (!both && cf_sigma) ? Json(*cf_sigma) : Json(nullptr);
    c["lambda_B"] = cf.lambda_sq ? Json(cf.lambda()) : Json(nullptr);
    c["lambda_B_squared"] = cf.lambda_sq ? rational_json(*cf.lambda_sq) : Json(nullptr);
    j["closed_form"] = c;
    j["bruteforce"] = bf_value;
    j["bruteforce_residual"] = bf.residual;
    if (data) {
      j["ell_gamma"] = bigint_json(data->ell_gamma);
      j["sigma_vB"] = data->sigma_vB ? Json(*data->sigma_vB) : Json(nullptr);
      Json angles = Json::array();
      for (const AngleRational& a : data->angles)
        angles.push_back(to_string(a));
      j["angles"] = angles;
    }
    Json arr = Json::array();
    for (auto [s, v] : etas) {
      Json x;
      x["s"] = s;
      x["value"] = v ? Json(*v) : Json(nullptr);
      arr.push_back(x);
    }
    j["eta_s"] = arr;
    out << dump_json(j);
    return 0;
  }

  out << "manifold: " << spec.name << " (n = " << spec.dimension() << ", r = " << checks.r << ")\n";
  out << "eta = " << eta_text;
  if (assumed)
    out << "  (sign assumes a positively oriented lattice basis)";
  out << "\n";
  if (data) {
    out << "f(B) = " << data->f_B << ", ell_gamma = " << data->ell_gamma << ", nu = " << data->nu
        << ", sigma_vB = " << (data->sigma_vB ? signed_str(*data->sigma_vB) : std::string("unknown"));
    if (data->lambda_sq)
      out << ", lambda_B^2 = " << to_string(*data->lambda_sq);
    out << "\n";
  }
  if (cf.zero) {
    out << "eta(s) = 0\n";
  } else {
    std::string coeff = std::to_string(std::int64_t(1) << (cf.f_B - 1));
    std::string sg = (both || !cf_sigma) ? "+-" : (*cf_sigma < 0 ? "-" : "");
    out << "eta(s) = " << sg << coeff << " (2^" << (cf.r + 1 - cf.nu) << " pi lambda_B)^(-s) (zeta(s,1/4) - zeta(s,3/4))\n";
  }
  out << "cotangent sum: " << bf_value << " (residual " << fmt(bf.residual, 3) << ", " << bf.ks.size()
      << " terms)\n";
  for (auto [s, v] : etas)
    out << "eta(" << fmt(s) << ") = " << (v ? fmt(*v) : std::string("needs the lattice metric")) << "\n";
  return 0;
}

// ---- enumerate ----------------------------------------------------------

std::string blocks_string(const BlockSpec& b) {
  std::string s;
  for (const BlockCount& c : b.counts) {
    auto add = [&](const char* kind, int count) {
      if (count == 0)
        return;
      if (!s.empty())
        s += " ";
      s += std::string(kind) + std::to_string(c.i) + (count > 1 ? "x" + std::to_string(count) : "");
    };
    if (c.i == 1) {
      add("J", c.C);
    } else {
      add("C", c.C);
      add("J", c.J);
    }
  }
  return s;
}

int cmd_enumerate(int dim, std::optional<int> r, bool expand, bool json, std::ostream& out) {
  if (dim < 3 || dim % 4 != 3)
    throw Error(ErrorCode::BadDimension, "dimension " + std::to_string(dim) + " is not 3 mod 4");
  std::vector<BlockSpec> specs = enumerate_family(dim, r, expand);
  Json arr = Json::array();
  std::ostringstream text;
  text << std::left << std::setw(4) << "r" << std::setw(22) << "j-tuple" << std::setw(28) << "blocks"
       << std::right << std::setw(6) << "f(B)" << std::setw(10) << "eta" << "\n";
  for (const BlockSpec& b : specs) {
    ManifoldSpec s = family_spec(b);
    EtaInvariant e = eta_invariant(s);
    int f = b.total_blocks() + 1;
    if (json) {
      Json x;
      x["r"] = b.r;
      x["j"] = b.j_tuple_string();
      x["blocks"] = blocks_string(b);
      x["dimension"] = dim;
      x["f_B"] = f;
      x["eta"] = e.value();
      arr.push_back(x);
    } else {
      text << std::left << std::setw(4) << b.r << std::setw(22) << b.j_tuple_string() << std::setw(28)
           << blocks_string(b) << std::right << std::setw(6) << f << std::setw(10) << e.value() << "\n";
    }
  }
  if (json) {
    Json j;
    j["dimension"] = dim;
    j["expand_cj"] = expand;
    j["count"] = specs.size();
    j["manifolds"] = arr;
    out << dump_json(j);
  } else {
    out << text.str() << specs.size() << " manifold" << (specs.size() == 1 ? "" : "s") << " in dimension "
        << dim << (expand ? "" : " (C/J variants collapsed)") << "\n";
  }
  return 0;
}

// ---- tables -------------------------------------------------------------

int cmd_table1(int max, bool json, std::ostream& out) {
  auto rows = table_eta_by_dim(max);
  if (!json) {
    out << render_table1(rows);
    return 0;
  }
  Json arr = Json::array();
  for (const Table1Row& r : rows) {
    Json x;
    x["n"] = r.n;
    x["expansion"] = r.expansion;
    x["tau"] = r.tau;
    x["max_r"] = r.max_r;
    x["exponents"] = r.exponents;
    x["values"] = r.values();
    arr.push_back(x);
  }
  Json j;
  j["rows"] = arr;
  out << dump_json(j);
  return 0;
}

int cmd_table3(int max, int k, bool json, std::ostream& out) {
  auto rows = table_eta_power(k, max);
  if (!json) {
    out << render_table3(rows);
    return 0;
  }
  Json arr = Json::array();
  for (const Table3Row& r : rows) {
    Json x;
    x["dim"] = r.dim;
    x["partition"] = r.partition;
    x["J"] = r.J;
    x["r"] = r.r;
    x["F"] = r.F;
    arr.push_back(x);
  }
  Json j;
  j["eta"] = std::int64_t(1) << k;
  j["rows"] = arr;
  out << dump_json(j);
  return 0;
}

// ---- homology -----------------------------------------------------------

int cmd_homology(const SpecSource& src, bool json, std::ostream& out) {
  ManifoldSpec spec = src.resolve();
  AbelianGroup g = h1(spec);
  int rank = g.free_rank + g.two_rank();
  BigInt spins = BigInt(1) << rank;
  std::optional<TorsionCheck> tc;
  std::string tc_error;
  try {
    tc = eta_torsion_check(spec);
  } catch (const Error& e) {
    tc_error = e.what();
  }
  if (json) {
    Json j;
    Json h;
    h["rank"] = g.free_rank;
    Json tors = Json::array();
    for (const BigInt& d : g.torsion)
      tors.push_back(bigint_json(d));
    h["torsion"] = tors;
    j["H1"] = h;
    j["H1_string"] = g.str();
    j["H1_mod2_rank"] = rank;
    j["spin_structures"] = bigint_json(spins);
    if (tc) {
      j["eta"] = tc->eta.known() ? Json(tc->eta.value()) : Json(nullptr);
      j["eta_magnitude"] = tc->eta.magnitude;
      j["eta_torsion_check"] = tc->pass() ? "pass" : "fail";
      j["magnitude_check"] = tc->magnitude_ok ? "pass" : "fail";
      j["sign_check"] = tc->sign_ok ? Json(*tc->sign_ok ? "pass" : "fail") : Json("unknown");
    } else {
      j["eta_torsion_check"] = "error: " + tc_error;
    }
    out << dump_json(j);
    return 0;
  }
  out << "H1(M, Z) = " << g.str() << "\n";
  out << "H^1(M, Z_2) rank = " << rank << ", spin structures (if spin) = " << spins << "\n";
  if (tc) {
    out << "eta torsion check: " << (tc->pass() ? "pass" : "fail") << " (" << tc->detail() << ")\n";
    out << "  |eta| = |T|/2 = #Spin/4: " << (tc->magnitude_ok ? "pass" : "fail")
        << "; eta = -|T|/2: " << (tc->sign_ok ? (*tc->sign_ok ? "pass" : "fail") : "sign unknown") << "\n";
  } else {
    out << "eta torsion check: " << tc_error << "\n";
  }
  return 0;
}

// ---- donnelly -----------------------------------------------------------

Json donnelly_value_json(const DonnellyValue& v) {
  Json j;
  j["h"] = v.h;
  j["value"] = to_double(v.raw);
  j["exact"] = v.exact ? rational_json(*v.exact) : Json(nullptr);
  j["terms"] = v.terms.size();
  return j;
}

int cmd_donnelly(const SpecSource& src, bool force, bool json, std::ostream& out) {
  if (src.triscosm) {
    if (src.count() != 1)
      throw UsageError("give exactly one spec source");
    TriscosmReport t = triscosm();
    if (json) {
      Json j;
      j["name"] = "triscosm";
      j["hypothesis_met"] = false;
      j["hypothesis_reason"] = t.hypothesis.reason;
      j["eta_do_forced"] = donnelly_value_json(t.forced);
      j["eta"] = rational_json(*t.eta_true_exact);
      j["agree"] = *t.forced.exact == *t.eta_true_exact;
      out << dump_json(j);
    } else {
      out << "triscosm: Donnelly hypothesis not met (" << t.hypothesis.reason << ")\n";
      out << "forced Donnelly value = " << to_string(*t.forced.exact) << " (" << fmt(to_double(t.forced.raw))
          << ")\n";
      out << "eta = " << to_string(*t.eta_true_exact) << " (cotangent sum over Z_3)\n";
    }
    return 0;
  }
  ManifoldSpec spec = src.resolve();
  DonnellyReport rep = compare(spec, force);
  if (json) {
    Json j;
    j["name"] = rep.name;
    j["hypothesis_met"] = rep.hypothesis.met;
    j["hypothesis_reason"] = rep.hypothesis.reason;
    j["forced"] = force && !rep.hypothesis.met;
    j["eta_do"] = rep.eta_do ? donnelly_value_json(*rep.eta_do) : Json(nullptr);
    j["eta_mp"] = (rep.eta_mp && rep.eta_mp->known()) ? Json(rep.eta_mp->value()) : Json(nullptr);
    j["ratio_ok"] = rep.ratio_ok ? Json(*rep.ratio_ok) : Json(nullptr);
    if (!rep.error.empty())
      j["error"] = rep.error;
    out << dump_json(j);
    return 0;
  }
  out << "manifold: " << rep.name << "\n";
  out << "Donnelly hypothesis: " << (rep.hypothesis.met ? "met" : "not met (" + rep.hypothesis.reason + ")") << "\n";
  if (rep.eta_do)
    out << "eta_Do = " << (rep.eta_do->exact ? to_string(*rep.eta_do->exact) : fmt(to_double(rep.eta_do->raw)))
        << (force && !rep.hypothesis.met ? " (forced)" : "") << "\n";
  if (rep.eta_mp)
    out << "eta = " << rep.eta_mp->str() << "\n";
  if (rep.ratio_ok)
    out << "eta_Do = (-1)^(h+1) eta: " << (*rep.ratio_ok ? "yes" : "no") << "\n";
  if (!rep.error.empty())
    out << "note: " << rep.error << "\n";
  return rep.eta_do || !rep.hypothesis.met ? 0 : 1;
}

// ---- identities ---------------------------------------------------------

int cmd_identities(int max_r, bool serial, bool json, std::ostream& out) {
  IdentitySuiteOptions opt;
  if (max_r < 2 || max_r > 12)
    throw UsageError("--max-r must lie in 2..12");
  opt.max_r = max_r;
  opt.k_independence_max_r = std::min(max_r, 6);
  auto rows = identity_suite(opt, !serial);
  long fails = 0;
  std::map<std::string, std::pair<long, long>> per;
  for (const IdentityCheck& r : rows) {
    auto& p = per[r.identity];
    ++p.first;
    if (!r.ok) {
      ++p.second;
      ++fails;
    }
  }
  if (json) {
    Json j;
    Json summary;
    for (auto& [name, p] : per)
      summary[name] = {{"checked", p.first}, {"failed", p.second}};
    j["summary"] = summary;
    Json failures = Json::array();
    for (const IdentityCheck& r : rows)
      if (!r.ok)
        failures.push_back({{"identity", r.identity}, {"params", r.params}, {"value", r.value},
                            {"expected", r.expected}, {"error", r.error}});
    j["failures"] = failures;
    j["ok"] = fails == 0;
    out << dump_json(j);
  } else {
    for (const IdentityCheck& r : rows)
      out << (r.ok ? "PASS " : "FAIL ") << r.identity << " " << r.params << " value=" << fmt(r.value)
          << " expected=" << fmt(r.expected) << " err=" << fmt(r.error, 3) << "\n";
    for (auto& [name, p] : per)
      out << "# " << name << ": " << (p.first - p.second) << "/" << p.first << " pass\n";
  }
  return fails == 0 ? 0 : 1;
}

// ---- charpoly -----------------------------------------------------------

int cmd_charpoly(const SpecSource& src, const std::string& matrix, bool json, std::ostream& out) {
  IntMatrix B;
  if (!matrix.empty()) {
    if (src.count() != 0)
      throw UsageError("give either --matrix or a spec source");
    Json m;
    try {
      m = Json::parse(matrix);
    } catch (const Json::parse_error&) {
      throw UsageError("--matrix must be a JSON array of integer rows");
    }
    std::vector<std::vector<std::int64_t>> rows;
    try {
      rows = m.get<std::vector<std::vector<std::int64_t>>>();
    } catch (const Json::exception&) {
      throw UsageError("--matrix must be a JSON array of integer rows");
    }
    B = parse_int_matrix_rows(rows);
  } else {
    B = src.resolve().B;
  }
  IntPolynomial p = char_poly(B);
  CyclotomicFactorization f = cyclotomic_factor(p);
  std::string factors;
  for (auto [d, c] : f.exponents)
    factors += (factors.empty() ? "" : " ") + std::string("Phi_") + std::to_string(d) +
               (c > 1 ? "^" + std::to_string(c) : "");
  std::uint64_t order = matrix_order(B);
  std::vector<AngleRational> angles = rotation_angles(B);
  if (json) {
    Json j;
    j["char_poly"] = to_string(p);
    Json fac;
    for (auto [d, c] : f.exponents)
      fac[std::to_string(d)] = c;
    j["cyclotomic_exponents"] = fac;
    j["f_B"] = f.factor_count();
    j["order"] = order;
    j["fixed_dim"] = fixed_dim(B);
    Json a = Json::array();
    for (const AngleRational& x : angles)
      a.push_back(to_string(x));
    j["angles"] = a;
    out << dump_json(j);
    return 0;
  }
  out << "p_B(x) = " << to_string(p) << "\n";
  out << "        = " << factors << "\n";
  out << "f(B) = " << f.factor_count() << ", order = " << order << ", n_B = " << fixed_dim(B) << "\n";
  out << "angles:";
  for (const AngleRational& x : angles)
    out << " " << to_string(x);
  out << "\n";
  return 0;
}

// ---- selftest -----------------------------------------------------------

int cmd_selftest(const std::string& suite, bool json, std::ostream& out) {
  std::vector<SuiteResult> results;
  if (suite.empty())
    results = run_selftest();
  else
    results.push_back(run_selftest_suite(suite));
  bool ok = true;
  Json arr = Json::array();
  for (const SuiteResult& r : results) {
    ok = ok && r.ok();
    if (json) {
      arr.push_back({{"suite", r.name}, {"checked", r.checked}, {"failures", r.failures}, {"seconds", r.seconds}});
    } else {
      out << (r.ok() ? "PASS " : "FAIL ") << std::left << std::setw(18) << r.name << std::right << std::setw(7)
          << r.checked << " checks  " << std::fixed << std::setprecision(2) << r.seconds << " s\n";
      out.unsetf(std::ios::floatfield);
      for (const std::string& f : r.failures)
        out << "    " << f << "\n";
    }
  }
  if (json) {
    Json j;
    j["suites"] = arr;
    j["ok"] = ok;
    out << dump_json(j);
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eta invariants of flat manifolds with cyclic holonomy of order 2^r", "flat-eta"};
  app.require_subcommand(1);
  app.footer(spec_schema_help());

  EtaOptions eta;
  auto* c_eta = app.add_subcommand("eta", "Eta invariant, eta(s) closed form and cotangent-sum check");
  eta.src.add_to(c_eta, true);
  c_eta->add_option("--s", eta.s_values, "Comma separated s values for eta(s)");
  c_eta->add_option("--sign", eta.sign, "both: +- when the orientation is unknown; convention: orient by the lattice basis");
  c_eta->add_flag("--json", eta.json);

  int dim = 0;
  std::optional<int> r_filter;
  bool expand = false, json = false, force = false, serial = false;
  auto* c_enum = app.add_subcommand("enumerate", "List the family members of one dimension");
  c_enum->add_option("--dim", dim, "Dimension (3 mod 4)")->required();
  c_enum->add_option("--r", r_filter, "Only holonomy order 2^r");
  c_enum->add_flag("--expand-cj", expand, "List every C/J split separately");
  c_enum->add_flag("--json", json);

  int max = 63;
  auto* c_t1 = app.add_subcommand("table1", "Attainable eta values by dimension");
  c_t1->add_option("--max", max, "Largest dimension");
  c_t1->add_flag("--json", json);

  int max3 = 35, k3 = 3;
  auto* c_t3 = app.add_subcommand("table3", "Family members with |eta| = 2^k (default 8)");
  c_t3->add_option("--max", max3, "Largest dimension");
  c_t3->add_option("--k", k3, "Exponent k");
  c_t3->add_flag("--json", json);

  SpecSource hsrc;
  auto* c_h = app.add_subcommand("homology", "H1 via Smith normal form and the eta/torsion check");
  hsrc.add_to(c_h, false);
  c_h->add_flag("--json", json);

  SpecSource dsrc;
  auto* c_d = app.add_subcommand("donnelly-compare", "Donnelly's formula against the eta invariant");
  dsrc.add_to(c_d, true);
  c_d->add_flag("--force", force, "Evaluate even when the hypothesis fails");
  c_d->add_flag("--json", json);

  int max_r = 8;
  auto* c_id = app.add_subcommand("verify-identities", "Trigonometric and floor-sum identities");
  c_id->add_option("--max-r", max_r, "Largest r");
  c_id->add_flag("--serial", serial, "Run without OpenMP");
  c_id->add_flag("--json", json);

  SpecSource csrc;
  std::string matrix;
  auto* c_cp = app.add_subcommand("charpoly", "Characteristic polynomial and cyclotomic factorisation");
  csrc.add_to(c_cp, false);
  c_cp->add_option("--matrix", matrix, "Integer matrix as JSON rows");
  c_cp->add_flag("--json", json);

  std::string suite;
  auto* c_st = app.add_subcommand("selftest", "Run every invariant suite");
  c_st->add_option("--suite", suite, "Run a single suite");
  c_st->add_flag("--json", json);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << spec_schema_help();
    return 2;
  }

  try {
    if (c_eta->parsed())
      return cmd_eta(eta, out);
    if (c_enum->parsed())
      return cmd_enumerate(dim, r_filter, expand, json, out);
    if (c_t1->parsed())
      return cmd_table1(max, json, out);
    if (c_t3->parsed())
      return cmd_table3(max3, k3, json, out);
    if (c_h->parsed())
      return cmd_homology(hsrc, json, out);
    if (c_d->parsed())
      return cmd_donnelly(dsrc, force, json, out);
    if (c_id->parsed())
      return cmd_identities(max_r, serial, json, out);
    if (c_cp->parsed())
      return cmd_charpoly(csrc, matrix, json, out);
    if (c_st->parsed())
      return cmd_selftest(suite, json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << spec_schema_help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace flateta
