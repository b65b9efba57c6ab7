#include "maxmin/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

namespace maxmin::io {

namespace {

std::string where(std::size_t i, std::size_t j) {
  return "row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_size(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

json to_json(const ExtScalar& s) {
  if (s.is_integer() && s.value().get_num().fits_slong_p()) return s.value().get_num().get_si();
  return s.to_string();
}

ExtScalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<unsigned long long>() > std::numeric_limits<long>::max())
      throw ParseError("integer out of range");
    return ExtScalar(j.get<long>());
  }
  if (j.is_string()) return ExtScalar::parse(j.get<std::string>());
  if (j.is_number_float()) throw ParseError("floating-point value " + j.dump() + " is not exact; use \"num/den\"");
  throw ParseError("expected an integer or a \"num/den\" string, got " + j.dump());
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array");
  Vector v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      v.push_back(scalar_from_json(j[i]));
    } catch (const Error& e) {
      throw ParseError("entry " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return v;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.n(); ++i) out.push_back(to_json(m.row_vector(i)));
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t n = j.size();
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " must be an array of " + std::to_string(n) +
                       " entries");
    for (std::size_t k = 0; k < n; ++k) {
      try {
        m(i, k) = scalar_from_json(row[k]);
      } catch (const Error& e) {
        throw ParseError(where(i, k) + ": " + e.what());
      }
    }
  }
  return m;
}

json to_json(const Dbm& d) { return to_json(d.matrix()); }

Dbm dbm_from_json(const json& j) {
  Dbm d(matrix_from_json(j));
  if (auto c = canonicalize(d); c && *c == d) return *c;
  return d;
}

json to_json(const Digraph& g) {
  json out = json::array();
  for (const Arc& a : g.arcs) out.push_back({a.from + 1, a.to + 1});
  return out;
}

Digraph digraph_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("arc list must be an array");
  Digraph g{n, {}};
  for (const json& arc : j) {
    if (!arc.is_array() || arc.size() != 2) throw ParseError("arc must be a [from, to] pair");
    const std::size_t from = as_size(arc[0], "arc endpoint");
    const std::size_t to = as_size(arc[1], "arc endpoint");
    if (from < 1 || from > n || to < 1 || to > n) throw ParseError("arc endpoint out of range");
    g.arcs.push_back({from - 1, to - 1});
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

json to_json(const BoundMatrices& b) {
  return {{"L", to_json(b.L)}, {"U", to_json(b.U)}, {"P", to_json(b.P)},
          {"Q", to_json(b.Q)}, {"l", to_json(b.l)}, {"u", to_json(b.u)}};
}

BoundMatrices bounds_from_json(const json& j) {
  return {matrix_from_json(field(j, "L")), matrix_from_json(field(j, "U")),
          matrix_from_json(field(j, "P")), matrix_from_json(field(j, "Q")),
          scalar_from_json(field(j, "l")), scalar_from_json(field(j, "u"))};
}

json to_json(const ActiveStructure& s) {
  return {{"T", to_json(s.T)}, {"A_hat", to_json(s.A_hat)}, {"act", to_json(s.act)},
          {"pos", to_json(s.pos)}};
}

ActiveStructure active_from_json(const json& j, std::size_t n) {
  return {matrix_from_json(field(j, "T")), matrix_from_json(field(j, "A_hat")),
          digraph_from_json(field(j, "act"), n), digraph_from_json(field(j, "pos"), n)};
}

json to_json(const SolveReport& r) {
  json rounds = json::array();
  for (const auto& it : r.iterations)
    rounds.push_back({{"round", it.round},
                      {"m", it.m.to_string()},
                      {"branch", to_string(it.branch)},
                      {"l", it.l.to_string()},
                      {"u", it.u.to_string()}});
  json cols = json::array();
  for (std::size_t c : r.eigenvector_columns) cols.push_back(c + 1);
  return {{"n", r.n},
          {"p", r.p},
          {"status", to_string(r.status)},
          {"lambda", r.lambda ? json(r.lambda->to_string()) : json(nullptr)},
          {"eigenvector", r.eigenvector ? to_json(*r.eigenvector) : json(nullptr)},
          {"eigenvector_columns", cols},
          {"stabilized_dbm", to_json(r.stabilized_dbm)},
          {"refined_dbm", to_json(r.refined_dbm)},
          {"initial_bounds", to_json(r.initial_bounds)},
          {"initial_active", to_json(r.initial_active)},
          {"bounds", to_json(r.bounds)},
          {"active", to_json(r.active)},
          {"iterations", rounds},
          {"act_cycle_means", {{"min", r.act_min_cycle_mean.to_string()}, {"max", r.act_max_cycle_mean.to_string()}}},
          {"certificate_phase_used", r.certificate_phase_used},
          {"note", r.note}};
}

SolveReport report_from_json(const json& j) {
  SolveReport r;
  r.n = as_size(field(j, "n"), "n");
  r.p = as_size(field(j, "p"), "p");
  const json& status = field(j, "status");
  if (!status.is_string()) throw ParseError("status must be a string");
  r.status = status_from_string(status.get<std::string>());
  if (const json& l = field(j, "lambda"); !l.is_null()) r.lambda = scalar_from_json(l);
  if (const json& x = field(j, "eigenvector"); !x.is_null()) r.eigenvector = vector_from_json(x);
  for (const json& c : field(j, "eigenvector_columns")) {
    const std::size_t k = as_size(c, "column index");
    if (k < 1 || k > r.n) throw ParseError("column index out of range");
    r.eigenvector_columns.push_back(k - 1);
  }
  r.stabilized_dbm = dbm_from_json(field(j, "stabilized_dbm"));
  r.refined_dbm = dbm_from_json(field(j, "refined_dbm"));
  r.initial_bounds = bounds_from_json(field(j, "initial_bounds"));
  r.initial_active = active_from_json(field(j, "initial_active"), r.n);
  r.bounds = bounds_from_json(field(j, "bounds"));
  r.active = active_from_json(field(j, "active"), r.n);
  for (const json& it : field(j, "iterations")) {
    const json& branch = field(it, "branch");
    if (!branch.is_string()) throw ParseError("branch must be a string");
    r.iterations.push_back({as_size(field(it, "round"), "round"), scalar_from_json(field(it, "m")),
                            branch_from_string(branch.get<std::string>()),
                            scalar_from_json(field(it, "l")), scalar_from_json(field(it, "u"))});
  }
  const json& act = field(j, "act_cycle_means");
  r.act_min_cycle_mean = scalar_from_json(field(act, "min"));
  r.act_max_cycle_mean = scalar_from_json(field(act, "max"));
  r.certificate_phase_used = field(j, "certificate_phase_used").get<bool>();
  r.note = field(j, "note").get<std::string>();
  return r;
}

Matrix parse_matrix_file(const json& j) {
  if (!j.is_object()) throw ParseError("matrix file must be a JSON object with \"n\" and \"entries\"");
  const std::size_t n = as_size(field(j, "n"), "\"n\"");
  if (n == 0) throw ParseError("\"n\" must be at least 1");
  const json& rows = field(j, "entries");
  if (!rows.is_array()) throw ParseError("\"entries\" must be an array of rows");
  if (rows.size() != n)
    throw ParseError("\"entries\" has " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(n));
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " has " +
                       (row.is_array() ? std::to_string(row.size()) : std::string("no")) +
                       " entries, expected " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) {
      ExtScalar v;
      try {
        v = scalar_from_json(row[k]);
      } catch (const Error& e) {
        throw ParseError(where(i, k) + ": " + e.what());
      }
      if (!v.is_finite()) throw ParseError(where(i, k) + ": entries must be finite, got " + v.to_string());
      a(i, k) = v;
    }
  }
  return a;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return parse_matrix_file(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json matrix_file_json(const Matrix& a) { return {{"n", a.n()}, {"entries", to_json(a)}}; }

Vector parse_vector_list(std::string_view text) {
  Vector v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    try {
      v.push_back(ExtScalar::parse(part));
    } catch (const Error& e) {
      throw ParseError("vector entry " + std::to_string(v.size() + 1) + ": " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

}  // namespace maxmin::io
