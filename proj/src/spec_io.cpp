#include "flateta/spec_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace flateta {

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw Error(ErrorCode::InvalidSpec, "unknown field '" + it.key() + "' in " + where);
}

Rational json_rational(const Json& v) {
  if (v.is_number_integer())
    return Rational(v.get<long long>());
  if (v.is_string())
    return parse_rational(v.get<std::string>());
  throw Error(ErrorCode::InvalidSpec, "expected an integer or a \"p/q\" string, got " + v.dump());
}

std::int64_t json_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer())
    throw Error(ErrorCode::InvalidSpec, what + " must be an integer");
  return v.get<std::int64_t>();
}

RatMatrix json_rat_matrix(const Json& v, const std::string& what) {
  if (!v.is_array() || v.empty())
    throw Error(ErrorCode::InvalidSpec, what + " must be a non-empty array of rows");
  std::size_t rows = v.size(), cols = v[0].is_array() ? v[0].size() : 0;
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols)
      throw Error(ErrorCode::InvalidSpec, what + " rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = json_rational(v[i][k]);
  }
  return m;
}

ManifoldSpec parse_block_form(const Json& j) {
  reject_unknown(j, {"name", "r", "blocks", "ell"}, "block spec");
  if (!j.contains("r"))
    throw Error(ErrorCode::InvalidSpec, "block spec needs 'r'");
  int r = static_cast<int>(json_int(j["r"], "r"));
  if (r < 2 || r > 12)
    throw Error(ErrorCode::InvalidSpec, "block spec needs 2 <= r <= 12");
  BlockSpec bs;
  bs.r = r;
  for (int i = r - 1; i >= 1; --i)
    bs.counts.push_back({i, 0, 0});
  const Json& blocks = j["blocks"];
  if (!blocks.is_array())
    throw Error(ErrorCode::InvalidSpec, "'blocks' must be an array");
  std::set<int> seen;
  for (const Json& b : blocks) {
    if (!b.is_object())
      throw Error(ErrorCode::InvalidSpec, "each block entry must be an object");
    reject_unknown(b, {"i", "C", "J"}, "block entry");
    int i = static_cast<int>(json_int(b.value("i", Json()), "block 'i'"));
    if (i < 1 || i > r - 1 || !seen.insert(i).second)
      throw Error(ErrorCode::InvalidSpec, "block sizes must be distinct with 1 <= i <= r-1");
    BlockCount& c = bs.counts[static_cast<std::size_t>(r - 1 - i)];
    c.C = static_cast<int>(b.contains("C") ? json_int(b["C"], "block 'C'") : 0);
    c.J = static_cast<int>(b.contains("J") ? json_int(b["J"], "block 'J'") : 0);
    if (i == 1) {
      c.C += c.J;  // J_1 = C_1
      c.J = 0;
    }
  }
  std::int64_t ell = j.contains("ell") ? json_int(j["ell"], "ell") : 1;
  ManifoldSpec s = family_spec(bs, ell);
  if (j.contains("name"))
    s.name = j["name"].get<std::string>();
  return s;
}

ManifoldSpec parse_matrix_form(const Json& j) {
  reject_unknown(j, {"name", "r", "matrix", "translation", "lattice"}, "matrix spec");
  ManifoldSpec s;
  s.name = j.value("name", std::string("spec"));
  if (j.contains("r"))
    s.r = static_cast<int>(json_int(j["r"], "r"));
  const Json& m = j["matrix"];
  if (!m.is_array() || m.empty())
    throw Error(ErrorCode::InvalidSpec, "'matrix' must be a non-empty array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const Json& row : m) {
    if (!row.is_array())
      throw Error(ErrorCode::InvalidSpec, "'matrix' rows must be arrays");
    std::vector<std::int64_t> r;
    for (const Json& x : row)
      r.push_back(json_int(x, "matrix entry"));
    rows.push_back(r);
  }
  s.B = parse_int_matrix_rows(rows);
  if (!j.contains("translation") || !j["translation"].is_array())
    throw Error(ErrorCode::InvalidSpec, "matrix spec needs a 'translation' array");
  for (const Json& x : j["translation"])
    s.b.push_back(json_rational(x));
  if (j.contains("lattice")) {
    const Json& L = j["lattice"];
    if (L.is_string()) {
      std::string k = L.get<std::string>();
      if (k == "canonical")
        s.lattice.kind = LatticeKind::Canonical;
      else if (k == "unknown")
        s.lattice.kind = LatticeKind::Unknown;
      else
        throw Error(ErrorCode::InvalidSpec, "lattice must be 'canonical', 'unknown' or an object");
    } else if (L.is_object()) {
      reject_unknown(L, {"basis", "gram", "orientation"}, "lattice");
      if (L.contains("basis") == L.contains("gram"))
        throw Error(ErrorCode::InvalidSpec, "lattice object needs exactly one of 'basis' or 'gram'");
      if (L.contains("basis")) {
        if (L.contains("orientation"))
          throw Error(ErrorCode::InvalidSpec, "a lattice basis carries its own orientation");
        s.lattice.kind = LatticeKind::Basis;
        s.lattice.basis = json_rat_matrix(L["basis"], "lattice basis");
      } else {
        s.lattice.kind = LatticeKind::Gram;
        s.lattice.gram = json_rat_matrix(L["gram"], "Gram matrix");
        s.lattice.orientation = static_cast<int>(L.contains("orientation") ? json_int(L["orientation"], "orientation") : 1);
      }
    } else {
      throw Error(ErrorCode::InvalidSpec, "lattice must be a string or an object");
    }
  }
  return s;
}

void emit(const Json& j, std::string& out, int indent) {
  auto pad = [&](int k) { out.append(static_cast<std::size_t>(2 * k), ' '); };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first)
          out += ",\n";
        first = false;
        pad(indent + 1);
        out += Json(it.key()).dump() + ": ";
        emit(it.value(), out, indent + 1);
      }
      out += "\n";
      pad(indent);
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool scalar = true;
      for (const Json& x : j)
        if (x.is_structured())
          scalar = false;
      if (scalar) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i)
            out += ", ";
          emit(j[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i)
          out += ",\n";
        pad(indent + 1);
        emit(j[i], out, indent + 1);
      }
      out += "\n";
      pad(indent);
      out += "]";
      return;
    }
    case Json::value_t::number_float: {
      double d = j.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, d, std::chars_format::general, 17);
      std::string s(buf, res.ptr);
      if (s.find_first_of(".e") == std::string::npos)
        s += ".0";
      out += s;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

ManifoldSpec parse_spec(const Json& j) {
  if (!j.is_object())
    throw Error(ErrorCode::InvalidSpec, "spec must be a JSON object");
  if (j.contains("blocks") && j.contains("matrix"))
    throw Error(ErrorCode::InvalidSpec, "spec has both 'blocks' and 'matrix'");
  if (j.contains("blocks"))
    return parse_block_form(j);
  if (j.contains("matrix"))
    return parse_matrix_form(j);
  throw Error(ErrorCode::InvalidSpec, "spec needs 'blocks' or 'matrix'");
}

ManifoldSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::InvalidSpec, "cannot open spec file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidSpec, std::string("spec file is not valid JSON: ") + e.what());
  }
  return parse_spec(j);
}

const char* spec_schema_help() {
  return "Spec file schema (JSON object, unknown fields rejected):\n"
         "  block form:  {\"r\": 3, \"blocks\": [{\"i\": 2, \"C\": 0, \"J\": 1}, {\"i\": 1, \"C\": 1}],\n"
         "                \"ell\": 1, \"name\": \"...\"}\n"
         "  matrix form: {\"matrix\": [[0,-1,0],[1,0,0],[0,0,1]], \"translation\": [0, 0, \"1/4\"],\n"
         "                \"lattice\": \"canonical\" | \"unknown\" | {\"basis\": [[...]]}\n"
         "                           | {\"gram\": [[...]], \"orientation\": 1},\n"
         "                \"r\": 2, \"name\": \"...\"}\n"
         "  B and the translation are written in lattice coordinates; rationals are\n"
         "  integers or \"p/q\" strings.\n";
}

std::string dump_json(const Json& j) {
  std::string out;
  emit(j, out, 0);
  out += "\n";
  return out;
}

Json rational_json(const Rational& q) {
  if (denominator(q) == 1)
    return bigint_json(numerator(q));
  return to_string(q);
}

Json bigint_json(const BigInt& x) {
  if (x >= BigInt(std::numeric_limits<std::int64_t>::min()) &&
      x <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return x.convert_to<std::int64_t>();
  return x.str();
}

double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace flateta
