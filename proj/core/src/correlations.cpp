#include "qcorr/correlations.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

namespace qcorr {
namespace {

constexpr double kOffBlockTol = 1e-8;

Eigen::MatrixXcd local_transform(const BipartiteState& s, const MeasurementBasis& basis_a) {
  const Eigen::MatrixXcd w = Eigen::kroneckerProduct(
      basis_a.columns(), Eigen::MatrixXcd::Identity(s.dim_b(), s.dim_b()));
  return w.adjoint() * s.op().matrix() * w;
}

void check_basis_a(const BipartiteState& s, const MeasurementBasis& basis_a) {
  if (basis_a.dim() != s.dim_a()) {
    throw DimensionMismatch("measurement basis dimension", s.dim_a(), basis_a.dim());
  }
}

// Eigenvalues of a Hermitian 2x2 [[a, b], [conj(b), c]] by the closed form.
void eig2(const Eigen::MatrixXcd& m, double& lo, double& hi) {
  const double a = m(0, 0).real();
  const double c = m(1, 1).real();
  const double mean = 0.5 * (a + c);
  const double radius = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(m(0, 1)));
  lo = mean - radius;
  hi = mean + radius;
}

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

BipartiteState measure_local(const BipartiteState& s, const MeasurementBasis& basis_a) {
  check_basis_a(s, basis_a);
  const int da = s.dim_a();
  const int db = s.dim_b();
  Eigen::MatrixXcd in_basis = local_transform(s, basis_a);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < da; ++k)
      if (i != k) in_basis.block(i * db, k * db, db, db).setZero();
  const Eigen::MatrixXcd w = Eigen::kroneckerProduct(
      basis_a.columns(), Eigen::MatrixXcd::Identity(db, db));
  return BipartiteState(da, db,
                        DensityOperator::unchecked(w * in_basis * w.adjoint()));
}

ClassicalQuantumDecomposition cq_decompose(const BipartiteState& post,
                                           const MeasurementBasis& basis_a) {
  check_basis_a(post, basis_a);
  const int da = post.dim_a();
  const int db = post.dim_b();
  const Eigen::MatrixXcd in_basis = local_transform(post, basis_a);

  double off_block = 0.0;
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < da; ++k)
      if (i != k) {
        off_block = std::max(off_block,
                             in_basis.block(i * db, k * db, db, db).cwiseAbs().maxCoeff());
      }
  if (off_block > kOffBlockTol) throw NotBlockDiagonal(off_block);

  ClassicalQuantumDecomposition out;
  out.probs.resize(da);
  out.conditionals.reserve(da);
  for (int i = 0; i < da; ++i) {
    const Eigen::MatrixXcd block = in_basis.block(i * db, i * db, db, db);
    const double p = block.trace().real();
    out.probs[i] = std::max(p, 0.0);
    if (p <= kBranchTol) {
      out.conditionals.emplace_back(std::nullopt);
    } else {
      Eigen::MatrixXcd conditional = (block + block.adjoint()) / (2.0 * p);
      out.conditionals.emplace_back(DensityOperator::unchecked(std::move(conditional)));
    }
  }
  return out;
}

Bits information_gain(const BipartiteState& s, const MeasurementBasis& basis_a) {
  return mutual_information(measure_local(s, basis_a));
}

Bits discord_given(const BipartiteState& s, const MeasurementBasis& basis_a) {
  const double before = mutual_information(s).value();
  const double after = information_gain(s, basis_a).value();
  return Bits::from(before - after);
}

Bits deficit_given(const BipartiteState& s, const MeasurementBasis& basis_a) {
  const double post_entropy = von_neumann(measure_local(s, basis_a).op()).value();
  const double state_entropy = von_neumann(s.op()).value();
  return Bits::from(post_entropy - state_entropy);
}

MeasurementScan::MeasurementScan(const BipartiteState& s)
    : dim_a_(s.dim_a()), dim_b_(s.dim_b()) {
  const Eigen::MatrixXcd& m = s.op().matrix();
  blocks_.reserve(dim_a_ * dim_a_);
  for (int k = 0; k < dim_a_; ++k)
    for (int l = 0; l < dim_a_; ++l)
      blocks_.push_back(m.block(k * dim_b_, l * dim_b_, dim_b_, dim_b_));
  entropy_ab_ = von_neumann(s.op()).value();
  entropy_a_ = von_neumann(partial_trace(s, Subsystem::A)).value();
}

void MeasurementScan::block_entropies(const Eigen::MatrixXcd& v, double& post_entropy,
                                      double& outcome_entropy) const {
  post_entropy = 0.0;
  outcome_entropy = 0.0;
  Eigen::MatrixXcd block(dim_b_, dim_b_);
  for (int i = 0; i < dim_a_; ++i) {
    block.setZero();
    for (int k = 0; k < dim_a_; ++k) {
      const std::complex<double> vk = std::conj(v(k, i));
      for (int l = 0; l < dim_a_; ++l) {
        block.noalias() += (vk * v(l, i)) * blocks_[k * dim_a_ + l];
      }
    }
    outcome_entropy += entropy_term(block.trace().real());
    if (dim_b_ == 1) {
      post_entropy += entropy_term(block(0, 0).real());
    } else if (dim_b_ == 2) {
      double lo, hi;
      eig2(block, lo, hi);
      post_entropy += entropy_term(lo) + entropy_term(hi);
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block,
                                                             Eigen::EigenvaluesOnly);
      post_entropy += spectrum_entropy_bits(solver.eigenvalues());
    }
  }
}

double MeasurementScan::discord_objective(const Eigen::MatrixXcd& basis_columns) const {
  double post_entropy, outcome_entropy;
  block_entropies(basis_columns, post_entropy, outcome_entropy);
  return (entropy_a_ - entropy_ab_) + (post_entropy - outcome_entropy);
}

double MeasurementScan::deficit_objective(const Eigen::MatrixXcd& basis_columns) const {
  double post_entropy, outcome_entropy;
  block_entropies(basis_columns, post_entropy, outcome_entropy);
  return post_entropy - entropy_ab_;
}

OptimizedCorrelation discord(const BipartiteState& s, const OptimizerConfig& cfg) {
  const MeasurementScan scan(s);
  auto objective = [&scan](const ParamVector& p) {
    return scan.discord_objective(basis_from_params(p).columns());
  };
  const MinimizeResult r = minimize(objective, s.dim_a(), cfg);
  return {Bits::from(r.value), r.argmin, r.metadata};
}

OptimizedCorrelation one_way_deficit(const BipartiteState& s, const OptimizerConfig& cfg) {
  const MeasurementScan scan(s);
  auto objective = [&scan](const ParamVector& p) {
    return scan.deficit_objective(basis_from_params(p).columns());
  };
  const MinimizeResult r = minimize(objective, s.dim_a(), cfg);
  return {Bits::from(r.value), r.argmin, r.metadata};
}

Bits entanglement_pure(const PureState& psi, int dim_a, int dim_b) {
  if (psi.dim() != dim_a * dim_b) {
    throw DimensionMismatch("pure state dimension", dim_a * dim_b, psi.dim());
  }
  const BipartiteState s(dim_a, dim_b, from_pure(psi));
  return von_neumann(partial_trace(s, Subsystem::A));
}

Bits entanglement_pure(const BipartiteState& s, double purity_tol) {
  const double purity_dev = std::abs(s.op().purity() - 1.0);
  if (purity_dev > purity_tol) throw NotPure(purity_dev);
  return von_neumann(partial_trace(s, Subsystem::A));
}

double tradeoff_fixed(const BipartiteState& s, const MeasurementBasis& basis_a) {
  const double d = discord_given(s, basis_a).value();
  const double c =
      relative_entropy_of_coherence(partial_trace(s, Subsystem::A), basis_a)
          .value.value();
  const double def = deficit_given(s, basis_a).value();
  return d + c - def;
}

double tradeoff_coherence_loss(const BipartiteState& s, const MeasurementBasis& basis_a,
                               const MeasurementBasis& basis_b) {
  const MeasurementBasis joint = product_basis(basis_a, basis_b);
  const double before = relative_entropy_of_coherence(s.op(), joint).value.value();
  const double after =
      relative_entropy_of_coherence(measure_local(s, basis_a).op(), joint).value.value();
  const double def = deficit_given(s, basis_a).value();
  return before - after - def;
}

CorrelationReport tradeoff_optimized(const BipartiteState& s, const OptimizerConfig& cfg) {
  CorrelationReport report;
  const OptimizedCorrelation d = discord(s, cfg);
  const OptimizedCorrelation def = one_way_deficit(s, cfg);
  const DensityOperator rho_a = partial_trace(s, Subsystem::A);

  report.discord = d.value;
  report.deficit = def.value;
  report.discord_basis = d.basis_params;
  report.deficit_basis = def.basis_params;
  report.discord_convergence = d.metadata;
  report.deficit_convergence = def.metadata;
  report.coherence_a_reference =
      relative_entropy_of_coherence(rho_a).value;
  report.coherence_a_discord_basis =
      relative_entropy_of_coherence(rho_a, basis_from_params(d.basis_params)).value;
  report.coherence_a_deficit_basis =
      relative_entropy_of_coherence(rho_a, basis_from_params(def.basis_params)).value;

  report.residual_thm2 =
      d.value.value() + report.coherence_a_reference.value() - def.value.value();
  report.chain_upper_slack =
      d.value.value() + report.coherence_a_discord_basis.value() - def.value.value();
  report.chain_lower_slack =
      def.value.value() - d.value.value() - report.coherence_a_deficit_basis.value();
  return report;
}

}  // namespace qcorr
