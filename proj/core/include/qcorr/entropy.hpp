#pragma once

#include <Eigen/Dense>

#include "qcorr/qstate.hpp"

namespace qcorr {

/// Entropic quantity in base-2 units. Relative entropy can be infinite, so
/// the value carries an explicit infinity marker instead of throwing; the
/// measurement optimizer has to rank candidates that include infinities.
class Bits {
 public:
  Bits() = default;

  /// Finite value; round-off negatives in [-1e-9, 0) are clamped to 0.
  static Bits from(double v) {
    Bits b;
    b.value_ = (v < 0.0 && v >= -kEigenvalueFloor) ? 0.0 : v;
    return b;
  }

  static Bits infinity() {
    Bits b;
    b.infinite_ = true;
    return b;
  }

  bool is_infinite() const { return infinite_; }

  /// Finite value in bits; only meaningful when not infinite.
  double value() const { return value_; }

  /// Plain double with infinity mapped to +inf, usable as an objective.
  double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// -sum_i p_i log2 p_i over a spectrum, treating entries in
/// [-kEigenvalueFloor, 0] as exact zeros (0 log 0 = 0), no renormalization.
double spectrum_entropy_bits(const Eigen::VectorXd& eigenvalues);

/// Von Neumann entropy S(rho) in bits; 0 <= S <= log2(d).
Bits von_neumann(const DensityOperator& rho);

/// Quantum relative entropy S(rho || sigma) in bits. Infinite when the
/// support of rho is not contained in the support of sigma, detected as an
/// eigenvector of rho with eigenvalue > 1e-9 having squared overlap > 1e-9
/// with the null space of sigma. Nonnegative when finite.
Bits relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

/// S(rho^A) + S(rho^B) - S(rho^AB).
Bits mutual_information(const BipartiteState& s);

/// log2(d) - S(rho): the number of pure qubits extractable from the state.
Bits information_function(const DensityOperator& rho);

}  // namespace qcorr
