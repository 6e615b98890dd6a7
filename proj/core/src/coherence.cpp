#include "qcorr/coherence.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

namespace qcorr {

CoherenceValue relative_entropy_of_coherence(const DensityOperator& rho,
                                             const MeasurementBasis& basis) {
  if (basis.dim() != rho.dim()) {
    throw DimensionMismatch("coherence basis dimension", rho.dim(), basis.dim());
  }
  const double diag_entropy = von_neumann(dephase(rho, basis)).value();
  const double state_entropy = von_neumann(rho).value();
  return {Bits::from(diag_entropy - state_entropy), basis};
}

CoherenceValue relative_entropy_of_coherence(const DensityOperator& rho) {
  return relative_entropy_of_coherence(rho, MeasurementBasis::computational(rho.dim()));
}

CoherenceValue l1_coherence(const DensityOperator& rho, const MeasurementBasis& basis) {
  if (basis.dim() != rho.dim()) {
    throw DimensionMismatch("coherence basis dimension", rho.dim(), basis.dim());
  }
  const Eigen::MatrixXcd in_basis =
      basis.columns().adjoint() * rho.matrix() * basis.columns();
  double sum = in_basis.cwiseAbs().sum() - in_basis.diagonal().cwiseAbs().sum();
  return {Bits::from(sum), basis};
}

CoherenceValue l1_coherence(const DensityOperator& rho) {
  return l1_coherence(rho, MeasurementBasis::computational(rho.dim()));
}

PureState maximally_coherent(int dim) {
  Eigen::VectorXcd a =
      Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  return PureState(std::move(a));
}

Bits uncertainty_gap(const DensityOperator& rho, const MeasurementBasis& basis) {
  const double diag_entropy = von_neumann(dephase(rho, basis)).value();
  return Bits::from(std::log2(static_cast<double>(rho.dim())) - diag_entropy);
}

Bits uncertainty_gap(const DensityOperator& rho) {
  return uncertainty_gap(rho, MeasurementBasis::computational(rho.dim()));
}

MeasurementBasis product_basis(const MeasurementBasis& basis_a,
                               const MeasurementBasis& basis_b) {
  return MeasurementBasis::from_columns(
      Eigen::kroneckerProduct(basis_a.columns(), basis_b.columns()));
}

Bits superadditivity_gap(const BipartiteState& s, const MeasurementBasis& basis_a,
                         const MeasurementBasis& basis_b) {
  if (basis_a.dim() != s.dim_a() || basis_b.dim() != s.dim_b()) {
    throw DimensionMismatch("product basis dimensions", s.dim(),
                            basis_a.dim() * basis_b.dim());
  }
  const double joint =
      relative_entropy_of_coherence(s.op(), product_basis(basis_a, basis_b))
          .value.value();
  const double local_a =
      relative_entropy_of_coherence(partial_trace(s, Subsystem::A), basis_a)
          .value.value();
  const double local_b =
      relative_entropy_of_coherence(partial_trace(s, Subsystem::B), basis_b)
          .value.value();
  return Bits::from(joint - local_a - local_b);
}

}  // namespace qcorr
