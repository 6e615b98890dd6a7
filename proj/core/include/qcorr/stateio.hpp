#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/measopt.hpp"
#include "qcorr/qstate.hpp"

namespace qcorr {

/// A state file is malformed (not JSON, wrong shapes, bad dims).
class StateFormatError : public Error {
 public:
  explicit StateFormatError(const std::string& what) : Error(what) {}
};

/// On-disk state: UTF-8 JSON with fields
///   dims:   array of 1 or 2 positive integers,
///   matrix: d x d array of [re, im] pairs (d = product of dims),
///   label:  optional string.
struct StateFile {
  std::vector<int> dims;
  Eigen::MatrixXcd matrix;
  std::string label;

  int dim() const {
    int d = 1;
    for (int x : dims) d *= x;
    return d;
  }
};

StateFile parse_state_file(const std::string& json_text);
std::string write_state_file(const StateFile& sf);

StateFile read_state_file(const std::string& path);
void save_state_file(const StateFile& sf, const std::string& path);

/// Validates the matrix as a density operator.
DensityOperator to_density(const StateFile& sf, double tol = kValidationTol);

/// Bipartite view; the split comes from `dims_override` when given, else from
/// the file's two-entry dims. Throws StateFormatError when no split is
/// available or the product does not match.
BipartiteState to_bipartite(const StateFile& sf,
                            std::optional<std::pair<int, int>> dims_override = {},
                            double tol = kValidationTol);

/// Basis file: JSON with fields dim and columns (d x d array of [re, im]
/// pairs; columns[i] is the i-th basis vector).
MeasurementBasis parse_basis_file(const std::string& json_text);
MeasurementBasis read_basis_file(const std::string& path);

}  // namespace qcorr
