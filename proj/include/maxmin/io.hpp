#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "maxmin/eigensolver.hpp"

namespace maxmin::io {

using nlohmann::json;

/// Integers become JSON numbers, other rationals "num/den" strings,
/// infinities "-inf" / "+inf".
json to_json(const ExtScalar& s);
ExtScalar scalar_from_json(const json& j);

json to_json(const Vector& v);
Vector vector_from_json(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const Dbm& d);
Dbm dbm_from_json(const json& j);

/// Arcs as 1-based [from, to] pairs.
json to_json(const Digraph& g);
Digraph digraph_from_json(const json& j, std::size_t n);

json to_json(const BoundMatrices& b);
BoundMatrices bounds_from_json(const json& j);

json to_json(const ActiveStructure& s);
ActiveStructure active_from_json(const json& j, std::size_t n);

/// Full report. Column indices are 1-based; lambda is always a string.
json to_json(const SolveReport& r);
SolveReport report_from_json(const json& j);

/// Problem matrix file: {"n": N, "entries": [[...], ...]}. Entries are
/// integers or "num/den" strings and must be finite. Errors name the
/// offending row and column.
Matrix parse_matrix_file(const json& j);
Matrix read_matrix_file(const std::string& path);
json matrix_file_json(const Matrix& a);

/// Comma-separated scalars, e.g. "0,1/2,-3".
Vector parse_vector_list(std::string_view text);

}  // namespace maxmin::io
