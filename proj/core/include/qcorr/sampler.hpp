#pragma once

#include <Eigen/Dense>

#include "qcorr/prng.hpp"
#include "qcorr/qstate.hpp"

namespace qcorr {

/// Haar-random pure state: a vector of independent standard complex normals,
/// normalized. Deterministic given the seed.
PureState haar_pure(int dim, Seed seed);

/// Random density operator G G^dagger / Tr(G G^dagger) with G a dim x rank
/// matrix of standard complex normals. Rank-1 draws are pure; full rank
/// covers the whole state space. Throws BadRank unless 1 <= rank <= dim.
DensityOperator ginibre_density(int dim, int rank, Seed seed);

/// Haar-random unitary: QR of a complex Gaussian matrix with the triangular
/// factor's diagonal forced positive. Without that phase fix the
/// orthonormalization is not Haar-distributed.
Eigen::MatrixXcd random_unitary(int dim, Seed seed);

}  // namespace qcorr
