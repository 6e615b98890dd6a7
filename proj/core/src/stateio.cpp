#include "qcorr/stateio.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace qcorr {
namespace {

using nlohmann::json;

Eigen::MatrixXcd parse_complex_matrix(const json& j, int rows, int cols,
                                      const std::string& field) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw StateFormatError(field + " must be an array of " + std::to_string(rows) +
                           " rows");
  }
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw StateFormatError(field + " row " + std::to_string(i) + " must have " +
                             std::to_string(cols) + " entries");
    }
    for (int k = 0; k < cols; ++k) {
      const json& entry = row[k];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw StateFormatError(field + " entries must be [re, im] pairs");
      }
      m(i, k) = std::complex<double>(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

json complex_matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) {
      row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateFormatError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

StateFile parse_state_file(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw StateFormatError(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
    throw StateFormatError("state file must be an object with dims and matrix");
  }
  StateFile sf;
  const json& dims = j["dims"];
  if (!dims.is_array() || dims.empty() || dims.size() > 2) {
    throw StateFormatError("dims must hold 1 or 2 positive integers");
  }
  for (const json& d : dims) {
    if (!d.is_number_integer() || d.get<int>() < 1) {
      throw StateFormatError("dims must hold 1 or 2 positive integers");
    }
    sf.dims.push_back(d.get<int>());
  }
  sf.matrix = parse_complex_matrix(j["matrix"], sf.dim(), sf.dim(), "matrix");
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw StateFormatError("label must be a string");
    sf.label = j["label"].get<std::string>();
  }
  return sf;
}

std::string write_state_file(const StateFile& sf) {
  json j;
  j["dims"] = sf.dims;
  if (!sf.label.empty()) j["label"] = sf.label;
  j["matrix"] = complex_matrix_to_json(sf.matrix);
  return j.dump(2) + "\n";
}

StateFile read_state_file(const std::string& path) {
  return parse_state_file(slurp(path));
}

void save_state_file(const StateFile& sf, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StateFormatError("cannot write file: " + path);
  out << write_state_file(sf);
}

DensityOperator to_density(const StateFile& sf, double tol) {
  return DensityOperator::validated(sf.matrix, tol);
}

BipartiteState to_bipartite(const StateFile& sf,
                            std::optional<std::pair<int, int>> dims_override,
                            double tol) {
  int da, db;
  if (dims_override) {
    da = dims_override->first;
    db = dims_override->second;
  } else if (sf.dims.size() == 2) {
    da = sf.dims[0];
    db = sf.dims[1];
  } else {
    throw StateFormatError("state has no bipartite split; pass --dims dA dB");
  }
  if (da * db != sf.dim()) {
    throw StateFormatError("dims product " + std::to_string(da * db) +
                           " does not match matrix dimension " +
                           std::to_string(sf.dim()));
  }
  return BipartiteState(da, db, to_density(sf, tol));
}

MeasurementBasis parse_basis_file(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw StateFormatError(std::string("basis file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("columns")) {
    throw StateFormatError("basis file must be an object with dim and columns");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1) {
    throw StateFormatError("dim must be a positive integer");
  }
  const int d = j["dim"].get<int>();
  // columns[i] is the i-th basis vector, stored as a row in the JSON array.
  const Eigen::MatrixXcd rows = parse_complex_matrix(j["columns"], d, d, "columns");
  return MeasurementBasis::from_columns(rows.transpose());
}

MeasurementBasis read_basis_file(const std::string& path) {
  return parse_basis_file(slurp(path));
}

}  // namespace qcorr
