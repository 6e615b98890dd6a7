#include "qcorr/qstate.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>

namespace qcorr {

PureState::PureState(Eigen::VectorXcd amplitudes, double tol)
    : amplitudes_(std::move(amplitudes)) {
  const double deviation = std::abs(amplitudes_.squaredNorm() - 1.0);
  if (deviation > tol) throw NotNormalized(deviation);
}

DensityOperator DensityOperator::validated(Eigen::MatrixXcd m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("density matrix must be square",
                            static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  }
  const double herm = (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
  if (herm > tol) throw NotHermitian(herm);
  const double trace_dev = std::abs(m.trace() - std::complex<double>(1.0, 0.0));
  if (trace_dev > tol) throw TraceNotOne(trace_dev);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("eigensolver failed during validation");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -10.0 * tol) throw NotPositive(-min_eig);
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::unchecked(Eigen::MatrixXcd m) {
  return DensityOperator(std::move(m));
}

double DensityOperator::purity() const { return (m_ * m_).trace().real(); }

BipartiteState::BipartiteState(int dim_a, int dim_b, DensityOperator op)
    : dim_a_(dim_a), dim_b_(dim_b), op_(std::move(op)) {
  if (op_.dim() != dim_a * dim_b) {
    throw DimensionMismatch("bipartite operator dimension", dim_a * dim_b, op_.dim());
  }
}

IncoherentState::IncoherentState(Eigen::VectorXd diagonal, double tol)
    : diagonal_(std::move(diagonal)) {
  double sum = 0.0;
  for (int i = 0; i < diagonal_.size(); ++i) {
    const double p = diagonal_[i];
    if (p < -tol || p > 1.0 + tol) throw NotPositive(p < 0 ? -p : p - 1.0);
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol) throw TraceNotOne(std::abs(sum - 1.0));
}

DensityOperator IncoherentState::to_operator() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) m(i, i) = std::max(diagonal_[i], 0.0);
  return DensityOperator::unchecked(std::move(m));
}

DensityOperator from_pure(const PureState& psi) {
  const Eigen::VectorXcd& a = psi.amplitudes();
  return DensityOperator::unchecked(a * a.adjoint());
}

BipartiteState tensor(const DensityOperator& a, const DensityOperator& b) {
  Eigen::MatrixXcd prod = Eigen::kroneckerProduct(a.matrix(), b.matrix());
  return BipartiteState(a.dim(), b.dim(), DensityOperator::unchecked(std::move(prod)));
}

DensityOperator partial_trace(const BipartiteState& s, Subsystem keep) {
  const int da = s.dim_a();
  const int db = s.dim_b();
  const Eigen::MatrixXcd& m = s.op().matrix();
  if (keep == Subsystem::A) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int k = 0; k < da; ++k)
        for (int j = 0; j < db; ++j) out(i, k) += m(i * db + j, k * db + j);
    return DensityOperator::unchecked(std::move(out));
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(db, db);
  for (int j = 0; j < db; ++j)
    for (int l = 0; l < db; ++l)
      for (int i = 0; i < da; ++i) out(j, l) += m(i * db + j, i * db + l);
  return DensityOperator::unchecked(std::move(out));
}

DensityOperator dephase(const DensityOperator& rho, const MeasurementBasis& basis) {
  if (basis.dim() != rho.dim()) {
    throw DimensionMismatch("dephasing basis dimension", rho.dim(), basis.dim());
  }
  const Eigen::MatrixXcd& v = basis.columns();
  const Eigen::VectorXd populations = (v.adjoint() * rho.matrix() * v).diagonal().real();
  return DensityOperator::unchecked(
      v * populations.cast<std::complex<double>>().asDiagonal() * v.adjoint());
}

DensityOperator dephase(const DensityOperator& rho) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  out.diagonal() = rho.matrix().diagonal().real().cast<std::complex<double>>();
  return DensityOperator::unchecked(std::move(out));
}

IncoherentState incoherent_part(const DensityOperator& rho, const MeasurementBasis& basis) {
  if (basis.dim() != rho.dim()) {
    throw DimensionMismatch("basis dimension", rho.dim(), basis.dim());
  }
  const Eigen::MatrixXcd& v = basis.columns();
  Eigen::VectorXd diag = (v.adjoint() * rho.matrix() * v).diagonal().real();
  for (int i = 0; i < diag.size(); ++i) diag[i] = std::max(diag[i], 0.0);
  return IncoherentState(std::move(diag));
}

DensityOperator rotate(const DensityOperator& rho, const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw DimensionMismatch("rotation dimension", rho.dim(), static_cast<int>(u.rows()));
  }
  const double residual =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (residual > tol) throw NotUnitary(residual);
  return DensityOperator::unchecked(u * rho.matrix() * u.adjoint());
}

Spectral spectral(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("eigensolver failed to converge");
  }
  Spectral out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

}  // namespace qcorr
