// Spec files (block form or explicit matrix form) and deterministic JSON output.
#ifndef FLATETA_SPEC_IO_HPP_
#define FLATETA_SPEC_IO_HPP_

#include <string>

#include <json.hpp>

#include "eta.hpp"

namespace flateta {

using Json = nlohmann::json;

// Block form:  {"r": 3, "blocks": [{"i": 2, "C": 0, "J": 1}, {"i": 1, "C": 1}], "ell": 1}
// Matrix form: {"matrix": [[...]], "translation": ["1/4", 0, ...],
//               "lattice": "canonical" | "unknown" | {"basis": [[...]]}
//                          | {"gram": [[...]], "orientation": 1}, "r": 2}
// Unknown fields are rejected with InvalidSpec.
ManifoldSpec parse_spec(const Json& j);
ManifoldSpec load_spec_file(const std::string& path);

const char* spec_schema_help();

// Sorted keys, two-space indent, doubles with 17 significant digits.
std::string dump_json(const Json& j);

Json rational_json(const Rational& q);  // integer when whole, else "p/q"
Json bigint_json(const BigInt& x);      // integer when it fits, else a string
double to_double(const Real& x);

}  // namespace flateta

#endif
