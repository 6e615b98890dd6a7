#include "qcorr/entropy.hpp"

#include <cmath>

namespace qcorr {
namespace {

// Threshold below which an eigenvalue counts as part of the null space.
constexpr double kSupportTol = 1e-9;

}  // namespace

double spectrum_entropy_bits(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (int i = 0; i < eigenvalues.size(); ++i) {
    const double p = eigenvalues[i];
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

Bits von_neumann(const DensityOperator& rho) {
  return Bits::from(spectrum_entropy_bits(spectral(rho).eigenvalues));
}

Bits relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("relative entropy operands", rho.dim(), sigma.dim());
  }
  const Spectral sr = spectral(rho);
  const Spectral ss = spectral(sigma);
  // overlaps(i, j) = |<v_i | w_j>|^2
  const Eigen::MatrixXd overlaps =
      (sr.eigenvectors.adjoint() * ss.eigenvectors).cwiseAbs2();

  for (int i = 0; i < rho.dim(); ++i) {
    if (sr.eigenvalues[i] <= kSupportTol) continue;
    double null_overlap = 0.0;
    for (int j = 0; j < sigma.dim(); ++j) {
      if (ss.eigenvalues[j] <= kSupportTol) null_overlap += overlaps(i, j);
    }
    if (null_overlap > kSupportTol) return Bits::infinity();
  }

  double value = -spectrum_entropy_bits(sr.eigenvalues);  // Tr(rho log2 rho)
  for (int i = 0; i < rho.dim(); ++i) {
    const double p = sr.eigenvalues[i];
    if (p <= 0.0) continue;
    for (int j = 0; j < sigma.dim(); ++j) {
      const double q = ss.eigenvalues[j];
      if (q <= kSupportTol) continue;
      value -= p * overlaps(i, j) * std::log2(q);
    }
  }
  return Bits::from(value);
}

Bits mutual_information(const BipartiteState& s) {
  const double sa = von_neumann(partial_trace(s, Subsystem::A)).value();
  const double sb = von_neumann(partial_trace(s, Subsystem::B)).value();
  const double sab = von_neumann(s.op()).value();
  return Bits::from(sa + sb - sab);
}

Bits information_function(const DensityOperator& rho) {
  return Bits::from(std::log2(static_cast<double>(rho.dim())) -
                    von_neumann(rho).value());
}

}  // namespace qcorr
