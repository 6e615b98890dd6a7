#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "qcorr/errors.hpp"
#include "qcorr/prng.hpp"

namespace qcorr {

/// Real parameters generating a rank-1 projective measurement basis.
///
/// For dimension d the vector holds one (angle, phase) pair per index pair
/// i < j, in lexicographic pair order (0,1), (0,2), ..., (d-2,d-1):
/// params[2q] is the rotation angle theta_q in [0, pi/2] and params[2q+1]
/// the phase phi_q in [0, 2*pi). Total length d*(d-1).
struct ParamVector {
  int dim = 0;
  std::vector<double> params;

  static int expected_length(int dim) { return dim * (dim - 1); }

  /// Wraps every phase into [0, 2*pi). For d = 2 an out-of-range angle is
  /// folded back into [0, pi/2] through the projector identities
  /// theta -> theta mod pi, then (theta, phi) -> (pi - theta, phi + pi);
  /// both describe the same two-outcome measurement. For d > 2 the fold is
  /// not measurement-preserving under composition, so angles must already
  /// lie in the box.
  ParamVector canonicalized() const;
};

/// Ordered orthonormal basis of a subsystem; column i is the vector whose
/// projector forms the i-th measurement outcome.
class MeasurementBasis {
 public:
  static MeasurementBasis computational(int dim);

  /// Validates that the Gram matrix is the identity within `tol`.
  static MeasurementBasis from_columns(Eigen::MatrixXcd columns, double tol = 1e-10);

  int dim() const { return static_cast<int>(columns_.cols()); }
  const Eigen::MatrixXcd& columns() const { return columns_; }
  Eigen::VectorXcd column(int i) const { return columns_.col(i); }

  /// The same basis viewed after the global rotation `u` (columns u * V).
  MeasurementBasis rotated(const Eigen::MatrixXcd& u) const;

 private:
  explicit MeasurementBasis(Eigen::MatrixXcd columns) : columns_(std::move(columns)) {}
  Eigen::MatrixXcd columns_;
};

struct OptimizerConfig {
  int grid_points_per_angle = 24;
  int restarts = 16;
  double abs_tol = 1e-9;
  int max_iters = 2000;
  Seed seed{0};
};

struct MinimizeMetadata {
  long evaluations = 0;       ///< total objective calls, grid included
  int best_start = 0;         ///< index of the winning start
  double final_improvement = 0.0;  ///< last sweep improvement of the winner
  int sweeps = 0;             ///< total coordinate sweeps across all starts
  bool converged = true;
};

struct MinimizeResult {
  double value = 0.0;
  ParamVector argmin;
  MinimizeMetadata metadata;
};

/// Thrown when the iteration budget runs out before the sweep improvement
/// falls below abs_tol; carries the best point seen so far.
class MinimizeFailure : public ConvergenceFailure {
 public:
  MinimizeFailure(double best_value, ParamVector best_params, long evaluations)
      : ConvergenceFailure("minimizer exhausted its iteration budget (best value so far " +
                           std::to_string(best_value) + ")"),
        best_value(best_value),
        best_params(std::move(best_params)),
        evaluations(evaluations) {}
  double best_value;
  ParamVector best_params;
  long evaluations;
};

/// Builds the basis generated by `p`: the two-level rotations are composed
/// in the documented pair order onto the identity. For d = 2 the single pair
/// (theta, phi) yields columns (cos t, e^{i phi} sin t) and
/// (-e^{-i phi} sin t, cos t).
MeasurementBasis basis_from_params(const ParamVector& p);

/// Deterministic multi-start derivative-free minimization over the parameter
/// box. For d = 2 a coarse grid scan (grid_points_per_angle per coordinate)
/// seeds the first start; for d > 2 the grid is replaced by cfg.restarts
/// random starts. Every start is refined by coordinate-wise golden-section
/// sweeps repeated until a full sweep improves the value by less than
/// cfg.abs_tol. Ties between starts within abs_tol resolve to the lowest
/// start index, so the reduction is order-independent.
MinimizeResult minimize(const std::function<double(const ParamVector&)>& objective,
                        int dim, const OptimizerConfig& cfg);

}  // namespace qcorr
