#include "homcart/json_io.hpp"

#include <fstream>

#include "homcart/errors.hpp"

namespace homcart {

using nlohmann::json;

namespace {

Matrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw input_error("field '" + field + "' must be an array of arrays");
  const int rows = static_cast<int>(j.size());
  if (rows == 0) return Matrix(0, 0);
  if (!j[0].is_array()) throw input_error("field '" + field + "' must be an array of arrays");
  const int cols = static_cast<int>(j[0].size());
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[static_cast<std::size_t>(r)].is_array() ||
        static_cast<int>(j[static_cast<std::size_t>(r)].size()) != cols)
      throw input_error("field '" + field + "' has rows of unequal length");
    for (int c = 0; c < cols; ++c) {
      const auto& v = j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (!v.is_number()) throw input_error("field '" + field + "' has a non-numeric entry");
      m(r, c) = v.get<double>();
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

LieAlgebra lie_algebra_from_json(const json& j) {
  if (!j.is_object()) throw input_error("Lie algebra: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw input_error("Lie algebra: missing integer field 'dim'");
  const int dim = j["dim"].get<int>();
  if (!j.contains("structure") || !j["structure"].is_array())
    throw input_error("Lie algebra: missing array field 'structure'");

  std::vector<StructureEntry> entries;
  for (const auto& e : j["structure"]) {
    if (!e.is_array() || e.size() != 4)
      throw input_error("Lie algebra: structure entries must be [i, j, k, c]");
    if (!e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_number_integer() ||
        !e[3].is_number())
      throw input_error("Lie algebra: structure entries must be [i, j, k, c]");
    StructureEntry s{e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<double>()};
    if (s.i >= s.j)
      throw input_error("Lie algebra: structure entry with i >= j ((" + std::to_string(s.i) + "," +
                        std::to_string(s.j) + ")); store only i < j");
    entries.push_back(s);
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw input_error("Lie algebra: 'labels' must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw input_error("Lie algebra: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return LieAlgebra(dim, std::move(entries), std::move(labels));
}

json lie_algebra_to_json(const LieAlgebra& L) {
  json j;
  j["dim"] = L.dim();
  json structure = json::array();
  for (const auto& e : L.structure()) structure.push_back(json::array({e.i, e.j, e.k, e.c}));
  j["structure"] = structure;
  if (!L.labels().empty()) j["labels"] = L.labels();
  return j;
}

ConnectionData connection_from_json(const json& j, double tol) {
  if (!j.is_object()) throw input_error("connection: expected an object");
  for (const char* field : {"kind", "h", "g", "k_basis", "p_basis", "alpha"})
    if (!j.contains(field))
      throw input_error(std::string("connection: missing field '") + field + "'");

  ConnectionData c;
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "cartan")
    c.kind = ConnectionKind::Cartan;
  else if (kind == "principal")
    c.kind = ConnectionKind::Principal;
  else
    throw input_error("connection: 'kind' must be \"cartan\" or \"principal\"");

  c.h = lie_algebra_from_json(j["h"]);
  c.g = lie_algebra_from_json(j["g"]);

  const Matrix krows = matrix_from_json(j["k_basis"], "k_basis");
  if (krows.rows() > 0 && krows.cols() != c.h.dim())
    throw input_error("connection: k_basis vectors must have length dim h");
  c.k_basis = krows.rows() > 0 ? span(krows, tol) : Subspace(c.h.dim(), tol);

  const Matrix prows = matrix_from_json(j["p_basis"], "p_basis");
  if (prows.rows() > 0 && prows.cols() != c.g.dim())
    throw input_error("connection: p_basis vectors must have length dim g");
  c.p_basis = prows.rows() > 0 ? span(prows, tol) : Subspace(c.g.dim(), tol);

  // one column per h-basis vector
  const Matrix by_cols = matrix_from_json(j["alpha"], "alpha");
  if (by_cols.rows() != c.h.dim() || by_cols.cols() != c.g.dim())
    throw input_error("connection: alpha must hold dim h columns of length dim g");
  c.alpha = by_cols.transpose();

  if (j.contains("simply_connected")) {
    if (!j["simply_connected"].is_boolean())
      throw input_error("connection: 'simply_connected' must be boolean");
    c.simply_connected = j["simply_connected"].get<bool>();
  }
  return c;
}

json connection_to_json(const ConnectionData& c) {
  json j;
  j["kind"] = c.kind == ConnectionKind::Cartan ? "cartan" : "principal";
  j["h"] = lie_algebra_to_json(c.h);
  j["g"] = lie_algebra_to_json(c.g);
  j["k_basis"] = matrix_to_json(c.k_basis.basis());
  j["p_basis"] = matrix_to_json(c.p_basis.basis());
  j["alpha"] = matrix_to_json(Matrix(c.alpha.transpose()));
  j["simply_connected"] = c.simply_connected;
  return j;
}

ConnectionData load_connection(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error("malformed JSON in " + path + ": " + e.what());
  }
  return connection_from_json(j, tol);
}

void save_connection(const ConnectionData& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open file for writing: " + path);
  out << connection_to_json(c).dump(2) << "\n";
}

}  // namespace homcart
