#include "qcorr/sampler.hpp"

#include <cmath>

namespace qcorr {
namespace {

Eigen::MatrixXcd complex_gaussian(int rows, int cols, Prng& rng) {
  Eigen::MatrixXcd g(rows, cols);
  // Row-major fill order is part of the pinned generation scheme.
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

}  // namespace

PureState haar_pure(int dim, Seed seed) {
  Prng rng(seed);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.complex_normal();
  v /= v.norm();
  return PureState(std::move(v));
}

DensityOperator ginibre_density(int dim, int rank, Seed seed) {
  if (rank < 1 || rank > dim) throw BadRank(dim, rank);
  Prng rng(seed);
  const Eigen::MatrixXcd g = complex_gaussian(dim, rank, rng);
  Eigen::MatrixXcd m = g * g.adjoint();
  m /= m.trace().real();
  // Valid by construction; round-off asymmetry stays far below the
  // validation tolerance.
  return DensityOperator::unchecked(std::move(m));
}

Eigen::MatrixXcd random_unitary(int dim, Seed seed) {
  Prng rng(seed);
  const Eigen::MatrixXcd g = complex_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const std::complex<double> rii = r(i, i);
    const double mag = std::abs(rii);
    const std::complex<double> phase = mag > 0 ? rii / mag : std::complex<double>(1, 0);
    q.col(i) *= phase;
  }
  return q;
}

}  // namespace qcorr
