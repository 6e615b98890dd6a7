#pragma once

#include "qcorr/entropy.hpp"
#include "qcorr/measopt.hpp"
#include "qcorr/qstate.hpp"

namespace qcorr {

/// A coherence figure together with the basis it was computed in. Coherence
/// is basis-dependent, so the basis travels with the number.
struct CoherenceValue {
  Bits value;
  MeasurementBasis basis;
};

/// Relative entropy of coherence: S(dephase(rho, basis)) - S(rho).
/// Equals the minimum relative entropy to any incoherent state.
CoherenceValue relative_entropy_of_coherence(const DensityOperator& rho,
                                             const MeasurementBasis& basis);
CoherenceValue relative_entropy_of_coherence(const DensityOperator& rho);

/// Sum of the moduli of all off-diagonal elements in the given basis.
CoherenceValue l1_coherence(const DensityOperator& rho, const MeasurementBasis& basis);
CoherenceValue l1_coherence(const DensityOperator& rho);

/// The pure state with all amplitudes 1/sqrt(d); its relative entropy of
/// coherence attains the maximum log2(d).
PureState maximally_coherent(int dim);

/// log2(d) - C_RE(rho) - S(rho) = log2(d) - S(dephase(rho)). Nonnegative;
/// zero exactly when the dephased state is maximally mixed.
Bits uncertainty_gap(const DensityOperator& rho, const MeasurementBasis& basis);
Bits uncertainty_gap(const DensityOperator& rho);

/// C_RE(rho^AB) - C_RE(rho^A) - C_RE(rho^B) in the product basis
/// basis_a (x) basis_b. Nonnegative; zero for product states.
Bits superadditivity_gap(const BipartiteState& s, const MeasurementBasis& basis_a,
                         const MeasurementBasis& basis_b);

/// Kronecker product of two subsystem bases under the row-major convention.
MeasurementBasis product_basis(const MeasurementBasis& basis_a,
                               const MeasurementBasis& basis_b);

}  // namespace qcorr
