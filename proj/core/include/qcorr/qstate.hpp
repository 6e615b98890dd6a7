#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qcorr/errors.hpp"
#include "qcorr/measopt.hpp"

namespace qcorr {

/// Default elementwise tolerance for state validation. The positivity floor
/// is one decade looser (eigenvalues >= -10 * tol), so round-off negatives
/// pass while genuinely indefinite matrices are rejected.
inline constexpr double kValidationTol = 1e-10;

/// Eigenvalues in [-kEigenvalueFloor, 0) count as zero in entropy sums, with
/// no renormalization; anything below the floor is a validation error.
inline constexpr double kEigenvalueFloor = 1e-9;

/// Normalized state vector.
class PureState {
 public:
  /// Throws NotNormalized unless the norm is one within tol.
  explicit PureState(Eigen::VectorXcd amplitudes, double tol = kValidationTol);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

 private:
  Eigen::VectorXcd amplitudes_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix.
class DensityOperator {
 public:
  /// Checks Hermiticity and unit trace within tol and eigenvalues down to
  /// -10 * tol. Throws NotHermitian / TraceNotOne / NotPositive with the
  /// measured violation magnitude.
  static DensityOperator validated(Eigen::MatrixXcd m, double tol = kValidationTol);

  /// Wraps a matrix known valid by construction; performs no checks.
  static DensityOperator unchecked(Eigen::MatrixXcd m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  double purity() const;  ///< Tr(rho^2)

 private:
  explicit DensityOperator(Eigen::MatrixXcd m) : m_(std::move(m)) {}
  Eigen::MatrixXcd m_;
};

/// Density operator on a tensor-product space. The composite index is
/// row-major over (A-index, B-index): (i, j) -> i * dim_b + j.
class BipartiteState {
 public:
  BipartiteState(int dim_a, int dim_b, DensityOperator op);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return dim_a_ * dim_b_; }
  const DensityOperator& op() const { return op_; }

 private:
  int dim_a_;
  int dim_b_;
  DensityOperator op_;
};

/// State diagonal in the reference basis: nonnegative entries summing to one.
class IncoherentState {
 public:
  explicit IncoherentState(Eigen::VectorXd diagonal, double tol = kValidationTol);

  int dim() const { return static_cast<int>(diagonal_.size()); }
  const Eigen::VectorXd& diagonal() const { return diagonal_; }
  DensityOperator to_operator() const;

 private:
  Eigen::VectorXd diagonal_;
};

enum class Subsystem { A, B };

/// Rank-1 projector |psi><psi|.
DensityOperator from_pure(const PureState& psi);

/// Kronecker product a (x) b under the row-major index convention.
BipartiteState tensor(const DensityOperator& a, const DensityOperator& b);

DensityOperator partial_trace(const BipartiteState& s, Subsystem keep);

/// Removes every off-diagonal element in the given basis: sum_i P_i rho P_i.
DensityOperator dephase(const DensityOperator& rho, const MeasurementBasis& basis);
DensityOperator dephase(const DensityOperator& rho);  ///< computational basis

/// The diagonal left behind by dephasing in `basis`.
IncoherentState incoherent_part(const DensityOperator& rho, const MeasurementBasis& basis);

/// u rho u^dagger. Throws NotUnitary when u fails the unitarity check.
DensityOperator rotate(const DensityOperator& rho, const Eigen::MatrixXcd& u,
                       double tol = kValidationTol);

struct Spectral {
  Eigen::VectorXd eigenvalues;   ///< sorted descending
  Eigen::MatrixXcd eigenvectors; ///< orthonormal columns, matching order
};

/// Eigendecomposition of a Hermitian operator. Throws ConvergenceFailure if
/// the solver does not converge.
Spectral spectral(const DensityOperator& rho);

}  // namespace qcorr
