#pragma once

#include <optional>
#include <vector>

#include "qcorr/coherence.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/measopt.hpp"
#include "qcorr/qstate.hpp"

namespace qcorr {

/// Probability below which a measurement branch counts as unpopulated: its
/// conditional is a null marker and it contributes nothing to entropy sums.
inline constexpr double kBranchTol = 1e-12;

/// Post-measurement form sum_i p_i |i><i| (x) rho^B_i.
struct ClassicalQuantumDecomposition {
  Eigen::VectorXd probs;
  std::vector<std::optional<DensityOperator>> conditionals;
};

/// Applies the local von Neumann measurement {P_i (x) I} on subsystem A:
/// sum_i (P_i (x) I) rho (P_i (x) I). Leaves rho^B unchanged and dephases
/// rho^A in basis_a.
BipartiteState measure_local(const BipartiteState& s, const MeasurementBasis& basis_a);

/// Reads the probabilities and conditional B-states out of a measured state.
/// Throws NotBlockDiagonal when any entry outside the diagonal blocks (in
/// basis_a coordinates) exceeds 1e-8 in magnitude.
ClassicalQuantumDecomposition cq_decompose(const BipartiteState& post,
                                           const MeasurementBasis& basis_a);

/// Information gained about B by measuring A: the mutual information of the
/// post-measurement state.
Bits information_gain(const BipartiteState& s, const MeasurementBasis& basis_a);

/// Mutual information lost to the measurement: I(rho) - I(post).
Bits discord_given(const BipartiteState& s, const MeasurementBasis& basis_a);

/// Entropy produced by the measurement: S(post) - S(rho). Coincides with
/// the relative entropy S(rho || post).
Bits deficit_given(const BipartiteState& s, const MeasurementBasis& basis_a);

/// Entropy bookkeeping for scanning many measurement bases over one state.
/// The state-constant entropies are computed once; each objective call only
/// touches the measured diagonal blocks. Values match discord_given /
/// deficit_given to round-off.
class MeasurementScan {
 public:
  explicit MeasurementScan(const BipartiteState& s);

  double discord_objective(const Eigen::MatrixXcd& basis_columns) const;
  double deficit_objective(const Eigen::MatrixXcd& basis_columns) const;

 private:
  void block_entropies(const Eigen::MatrixXcd& v, double& post_entropy,
                       double& outcome_entropy) const;

  int dim_a_;
  int dim_b_;
  std::vector<Eigen::MatrixXcd> blocks_;  ///< dB x dB blocks of rho, row-major
  double entropy_ab_ = 0.0;
  double entropy_a_ = 0.0;
};

/// Result of minimizing a measurement-dependent quantity over all rank-1
/// projective measurements on A.
struct OptimizedCorrelation {
  Bits value;
  ParamVector basis_params;
  MinimizeMetadata metadata;
};

/// Quantum discord: minimum of discord_given over von Neumann measurements
/// on A. Zero on classical-quantum states.
OptimizedCorrelation discord(const BipartiteState& s, const OptimizerConfig& cfg);

/// One-way quantum deficit: minimum of deficit_given. Upper-bounds discord.
OptimizedCorrelation one_way_deficit(const BipartiteState& s, const OptimizerConfig& cfg);

/// Entanglement of a bipartite pure state: the entropy of either reduced
/// state.
Bits entanglement_pure(const PureState& psi, int dim_a, int dim_b);

/// Operator-input form; throws NotPure unless Tr(rho^2) = 1 within purity_tol.
Bits entanglement_pure(const BipartiteState& s, double purity_tol = 1e-8);

/// Residual of the fixed-measurement identity
///   discord_given + C_RE(rho^A, basis_a) - deficit_given = 0,
/// which holds for every measurement basis up to round-off.
double tradeoff_fixed(const BipartiteState& s, const MeasurementBasis& basis_a);

/// Residual of the coherence-loss identity
///   C_RE(rho^AB) - C_RE(post) - deficit_given = 0
/// in the product basis basis_a (x) basis_b; exact for every basis_a.
double tradeoff_coherence_loss(const BipartiteState& s, const MeasurementBasis& basis_a,
                               const MeasurementBasis& basis_b);

/// Joint report on the optimized trade-off between discord, deficit and the
/// coherence of the measured subsystem. The headline identity
/// discord + C_RE(rho^A) = deficit is reported, not asserted: its proof
/// equates coherences of rho^A taken in three different bases, so the report
/// carries all three (reference/computational, discord-optimal basis,
/// deficit-optimal basis) plus the signed residual, and the two inequality
/// slacks that do follow from the per-measurement identity.
struct CorrelationReport {
  Bits discord;
  Bits deficit;
  Bits coherence_a_reference;
  Bits coherence_a_discord_basis;
  Bits coherence_a_deficit_basis;
  ParamVector discord_basis;
  ParamVector deficit_basis;
  double residual_thm2 = 0.0;      ///< discord + C_RE(ref) - deficit
  double chain_upper_slack = 0.0;  ///< discord + C_RE(discord basis) - deficit
  double chain_lower_slack = 0.0;  ///< deficit - discord - C_RE(deficit basis)
  MinimizeMetadata discord_convergence;
  MinimizeMetadata deficit_convergence;
};

CorrelationReport tradeoff_optimized(const BipartiteState& s, const OptimizerConfig& cfg);

}  // namespace qcorr
