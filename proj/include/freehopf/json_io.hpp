#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "freehopf/combination.hpp"
#include "freehopf/linrep.hpp"
#include "freehopf/rep.hpp"

namespace freehopf::json_io {

using Json = nlohmann::ordered_json;

// Wire formats. Rationals are strings "p" or "p/q"; matrices are row-major
// arrays of arrays.
//
//   MatRep: {"alphabet": "a:L,g:G", "dim": n, "assign": {"a": [[...]], ...}}
//   LinRep: {"alphabet": "a:L,b:L", "dim": n, "lambda": ["1","0"],
//            "mu": {"a": [["1","1"],["0","1"]], ...}, "gamma": [["0"],["1"]]}

/// Single-line canonical text: ", " and ": " between object members, no
/// spaces inside arrays.
std::string dump(const Json& j);

/// Throws ParseError on malformed JSON text.
Json parse(std::string_view text);

Json to_json(const Matrix& m);
Json to_json(const MatRep& r);
Json to_json(const LinRep& r);
Json to_json(const NCPoly& p);
Json to_json(const Tensor2& t);

// Structural problems (missing keys, wrong types, bad rationals) raise
// ParseError; well-formed but inconsistent content (wrong matrix sizes)
// raises DomainError.
Matrix matrix_from_json(const Json& j);
MatRep matrep_from_json(const Json& j);
LinRep linrep_from_json(const Json& j);

}  // namespace freehopf::json_io
