#include <doctest.h>

#include <qcorr/canonical.hpp>
#include <qcorr/correlations.hpp>
#include <qcorr/sampler.hpp>

#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace qcorr;
using testutil::check_close;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

const MeasurementBasis comp2 = MeasurementBasis::computational(2);

MeasurementBasis plus_minus_basis() { return basis_from_params({2, {kPi / 4.0, 0.0}}); }

BipartiteState bell_pair() { return BipartiteState(2, 2, from_pure(bell_state())); }

BipartiteState plus_plus() { return BipartiteState(2, 2, from_pure(plus_product())); }

BipartiteState random_two_qubit(std::uint64_t seed) {
  return BipartiteState(2, 2, ginibre_density(4, 4, Seed{seed}));
}

MeasurementBasis random_qubit_basis(std::uint64_t seed) {
  Prng rng(Seed{seed});
  return basis_from_params({2, {rng.uniform(0.0, kPi / 2.0), rng.uniform(0.0, 2.0 * kPi)}});
}

// Classical-quantum ensemble: p |0><0| (x) b0 + (1-p) |1><1| (x) b1.
BipartiteState classical_quantum(double p, const DensityOperator& b0,
                                 const DensityOperator& b1) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m.block(0, 0, 2, 2) = p * b0.matrix();
  m.block(2, 2, 2, 2) = (1.0 - p) * b1.matrix();
  return BipartiteState(2, 2, DensityOperator::unchecked(m));
}

}  // namespace

TEST_CASE("measuring a product state dephases only the measured side") {
  const DensityOperator a = ginibre_density(2, 2, Seed{1});
  const DensityOperator b = ginibre_density(2, 2, Seed{2});
  const MeasurementBasis basis = random_qubit_basis(3);
  const BipartiteState post = measure_local(tensor(a, b), basis);
  check_close(post.op().matrix(), tensor(dephase(a, basis), b).op().matrix());
}

TEST_CASE("measuring the Bell pair in the computational basis") {
  const BipartiteState post = measure_local(bell_pair(), comp2);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 0.5;
  check_close(post.op().matrix(), expected);
}

TEST_CASE("measuring |+>|+> in its own eigenbasis changes nothing") {
  const BipartiteState post = measure_local(plus_plus(), plus_minus_basis());
  check_close(post.op().matrix(), plus_plus().op().matrix());
}

TEST_CASE("measure_local matches the projector-sum oracle and fixes the marginals") {
  for (std::uint64_t seed = 10; seed < 14; ++seed) {
    const BipartiteState s = random_two_qubit(seed);
    const MeasurementBasis basis = random_qubit_basis(seed + 100);
    const BipartiteState post = measure_local(s, basis);
    check_close(post.op().matrix(),
                oracle::measure_a_by_projectors(s.op().matrix(), basis.columns(), 2),
                1e-12);
    check_close(partial_trace(post, Subsystem::B).matrix(),
                partial_trace(s, Subsystem::B).matrix());
    check_close(partial_trace(post, Subsystem::A).matrix(),
                dephase(partial_trace(s, Subsystem::A), basis).matrix());
  }
}

TEST_CASE("cq_decompose reads the measured Bell pair") {
  const ClassicalQuantumDecomposition cq =
      cq_decompose(measure_local(bell_pair(), comp2), comp2);
  CHECK(cq.probs[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cq.probs[1] == doctest::Approx(0.5).epsilon(1e-12));
  Eigen::MatrixXcd zero(2, 2), one(2, 2);
  zero << 1, 0, 0, 0;
  one << 0, 0, 0, 1;
  check_close(cq.conditionals[0]->matrix(), zero);
  check_close(cq.conditionals[1]->matrix(), one);
}

TEST_CASE("cq_decompose on a measured product state repeats the B factor") {
  const DensityOperator a = ginibre_density(2, 2, Seed{21});
  const DensityOperator b = ginibre_density(2, 2, Seed{22});
  const ClassicalQuantumDecomposition cq =
      cq_decompose(measure_local(tensor(a, b), comp2), comp2);
  check_close(cq.conditionals[0]->matrix(), b.matrix());
  check_close(cq.conditionals[1]->matrix(), b.matrix());
}

TEST_CASE("cq_decompose marks unpopulated branches") {
  Eigen::MatrixXcd pure0(2, 2);
  pure0 << 1, 0, 0, 0;
  const BipartiteState s =
      tensor(DensityOperator::unchecked(pure0), ginibre_density(2, 2, Seed{23}));
  const ClassicalQuantumDecomposition cq = cq_decompose(measure_local(s, comp2), comp2);
  CHECK(cq.probs[1] <= kBranchTol);
  CHECK_FALSE(cq.conditionals[1].has_value());
  CHECK(cq.conditionals[0].has_value());
}

TEST_CASE("cq_decompose reassembles the post-measurement state") {
  for (std::uint64_t seed = 24; seed < 27; ++seed) {
    const BipartiteState s = random_two_qubit(seed);
    const MeasurementBasis basis = random_qubit_basis(seed + 100);
    const BipartiteState post = measure_local(s, basis);
    const ClassicalQuantumDecomposition cq = cq_decompose(post, basis);
    CHECK(cq.probs.sum() == doctest::Approx(1.0).epsilon(1e-10));
    Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(4, 4);
    for (int i = 0; i < 2; ++i) {
      if (!cq.conditionals[i]) continue;
      const Eigen::MatrixXcd proj = basis.column(i) * basis.column(i).adjoint();
      Eigen::MatrixXcd term(4, 4);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          term.block(r * 2, c * 2, 2, 2) = proj(r, c) * cq.conditionals[i]->matrix();
      rebuilt += cq.probs[i] * term;
    }
    check_close(rebuilt, post.op().matrix());
  }
}

TEST_CASE("cq_decompose rejects states with coherent A-blocks") {
  CHECK_THROWS_AS(cq_decompose(bell_pair(), comp2), NotBlockDiagonal);
}

TEST_CASE("information gain") {
  CHECK(information_gain(bell_pair(), comp2).value() == doctest::Approx(1.0).epsilon(1e-12));

  const BipartiteState product =
      tensor(ginibre_density(2, 2, Seed{31}), ginibre_density(2, 2, Seed{32}));
  CHECK(information_gain(product, comp2).value() == doctest::Approx(0.0).epsilon(1e-10));

  // A classical-quantum state read in its own basis gives up everything.
  const BipartiteState cq = classical_quantum(0.3, ginibre_density(2, 2, Seed{33}),
                                              ginibre_density(2, 2, Seed{34}));
  CHECK(information_gain(cq, comp2).value() ==
        doctest::Approx(mutual_information(cq).value()).epsilon(1e-10));
}

TEST_CASE("discord-like quantity at a fixed measurement") {
  CHECK(discord_given(bell_pair(), comp2).value() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(discord_given(plus_plus(), plus_minus_basis()).value() ==
        doctest::Approx(0.0).epsilon(1e-10));
  const BipartiteState cq = classical_quantum(0.4, ginibre_density(2, 2, Seed{35}),
                                              ginibre_density(2, 2, Seed{36}));
  CHECK(discord_given(cq, comp2).value() == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("deficit-like quantity at a fixed measurement") {
  CHECK(deficit_given(bell_pair(), comp2).value() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(deficit_given(plus_plus(), plus_minus_basis()).value() ==
        doctest::Approx(0.0).epsilon(1e-10));

  // Dephasing a |+> factor costs exactly one bit.
  const BipartiteState s =
      tensor(from_pure(maximally_coherent(2)), ginibre_density(2, 2, Seed{37}));
  CHECK(deficit_given(s, comp2).value() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("deficit equals the relative entropy to the measured state") {
  for (std::uint64_t seed = 40; seed < 45; ++seed) {
    const BipartiteState s = random_two_qubit(seed);
    const MeasurementBasis basis = random_qubit_basis(seed + 100);
    const double by_entropy = deficit_given(s, basis).value();
    const Bits by_divergence = relative_entropy(s.op(), measure_local(s, basis).op());
    REQUIRE_FALSE(by_divergence.is_infinite());
    CHECK(std::abs(by_entropy - by_divergence.value()) <= 1e-8);
  }
}

TEST_CASE("the measurement scan reproduces the definitional quantities") {
  for (std::uint64_t seed = 50; seed < 55; ++seed) {
    const BipartiteState s = random_two_qubit(seed);
    const MeasurementScan scan(s);
    const MeasurementBasis basis = random_qubit_basis(seed + 100);
    CHECK(scan.discord_objective(basis.columns()) ==
          doctest::Approx(discord_given(s, basis).value()).epsilon(1e-10));
    CHECK(scan.deficit_objective(basis.columns()) ==
          doctest::Approx(deficit_given(s, basis).value()).epsilon(1e-10));
  }
  // and with a larger B side, exercising the dense block solver
  const BipartiteState wide(2, 3, ginibre_density(6, 6, Seed{56}));
  const MeasurementScan scan(wide);
  const MeasurementBasis basis = random_qubit_basis(57);
  CHECK(scan.discord_objective(basis.columns()) ==
        doctest::Approx(discord_given(wide, basis).value()).epsilon(1e-10));
}

TEST_CASE("discord of the canonical states") {
  OptimizerConfig cfg;
  cfg.seed = Seed{60};

  const OptimizedCorrelation bell = discord(bell_pair(), cfg);
  const oracle::GridMin g = oracle::grid_min_discord(bell_pair().op().matrix(), 2, 256);
  CHECK(bell.value.value() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(bell.value.value() - g.value) <= 1e-4);

  CHECK(discord(plus_plus(), cfg).value.value() == doctest::Approx(0.0).epsilon(1e-6));

  const BipartiteState cq = classical_quantum(0.25, ginibre_density(2, 2, Seed{61}),
                                              ginibre_density(2, 2, Seed{62}));
  CHECK(discord(cq, cfg).value.value() <= 1e-6);
}

TEST_CASE("one-way deficit of the canonical states") {
  OptimizerConfig cfg;
  cfg.seed = Seed{63};

  const OptimizedCorrelation bell = one_way_deficit(bell_pair(), cfg);
  const oracle::GridMin g = oracle::grid_min_deficit(bell_pair().op().matrix(), 2, 256);
  CHECK(bell.value.value() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(bell.value.value() - g.value) <= 1e-4);

  CHECK(one_way_deficit(plus_plus(), cfg).value.value() <= 1e-6);

  const BipartiteState cq = classical_quantum(0.25, ginibre_density(2, 2, Seed{64}),
                                              ginibre_density(2, 2, Seed{65}));
  CHECK(one_way_deficit(cq, cfg).value.value() <= 1e-6);
}

TEST_CASE("pure-state entanglement") {
  CHECK(entanglement_pure(bell_state(), 2, 2).value() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entanglement_pure(plus_product(), 2, 2).value() ==
        doctest::Approx(0.0).epsilon(1e-12));
  // the corner state is maximally entangled
  CHECK(entanglement_pure(coherent_entangled_pair(), 2, 2).value() ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(entanglement_pure(random_two_qubit(66)), NotPure);
  CHECK(entanglement_pure(bell_pair()).value() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pure-state entanglement equals the coherence in the Schmidt basis") {
  for (std::uint64_t seed = 70; seed < 73; ++seed) {
    const PureState psi = haar_pure(4, Seed{seed});
    Eigen::MatrixXcd amp(2, 2);
    amp << psi.amplitudes()[0], psi.amplitudes()[1], psi.amplitudes()[2],
        psi.amplitudes()[3];
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        amp, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const MeasurementBasis schmidt_a = MeasurementBasis::from_columns(svd.matrixU());
    const MeasurementBasis schmidt_b =
        MeasurementBasis::from_columns(svd.matrixV().conjugate());
    const double coherence =
        relative_entropy_of_coherence(from_pure(psi),
                                      product_basis(schmidt_a, schmidt_b))
            .value.value();
    CHECK(entanglement_pure(psi, 2, 2).value() == doctest::Approx(coherence).epsilon(1e-9));
  }
}

TEST_CASE("fixed-measurement trade-off is an exact identity") {
  CHECK(tradeoff_fixed(bell_pair(), comp2) == doctest::Approx(0.0).epsilon(1e-12));

  // |+>|+> in the computational basis: terms (0, 1, 1) cancel exactly.
  const BipartiteState s = plus_plus();
  CHECK(discord_given(s, comp2).value() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(relative_entropy_of_coherence(partial_trace(s, Subsystem::A), comp2)
            .value.value() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(deficit_given(s, comp2).value() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tradeoff_fixed(s, comp2) == doctest::Approx(0.0).epsilon(1e-10));

  for (std::uint64_t seed = 80; seed < 120; ++seed) {
    const BipartiteState r = random_two_qubit(seed);
    const MeasurementBasis basis = random_qubit_basis(seed + 500);
    CHECK(std::abs(tradeoff_fixed(r, basis)) <= 1e-8);
  }
}

TEST_CASE("coherence-loss trade-off is an exact identity") {
  CHECK(tradeoff_coherence_loss(bell_pair(), comp2, comp2) ==
        doctest::Approx(0.0).epsilon(1e-12));

  const BipartiteState product =
      tensor(ginibre_density(2, 2, Seed{90}), ginibre_density(2, 2, Seed{91}));
  CHECK(std::abs(tradeoff_coherence_loss(product, comp2, comp2)) <= 1e-10);

  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const BipartiteState r = random_two_qubit(seed);
    const MeasurementBasis basis_a = random_qubit_basis(seed + 500);
    const MeasurementBasis basis_b = random_qubit_basis(seed + 900);
    CHECK(std::abs(tradeoff_coherence_loss(r, basis_a, basis_b)) <= 1e-8);
  }
}

TEST_CASE("measurement keeps the product-basis incoherent part intact") {
  // The measured and unmeasured states dephase to the same diagonal, which
  // is what turns the coherence-loss difference into the deficit.
  for (std::uint64_t seed = 145; seed < 149; ++seed) {
    const BipartiteState s = random_two_qubit(seed);
    const MeasurementBasis basis_a = random_qubit_basis(seed + 500);
    const MeasurementBasis basis_b = random_qubit_basis(seed + 900);
    const MeasurementBasis joint = product_basis(basis_a, basis_b);
    check_close(dephase(measure_local(s, basis_a).op(), joint).matrix(),
                dephase(s.op(), joint).matrix());
  }
}

TEST_CASE("optimized trade-off report for the Bell pair") {
  OptimizerConfig cfg;
  cfg.seed = Seed{95};
  const CorrelationReport r = tradeoff_optimized(bell_pair(), cfg);
  CHECK(r.discord.value() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.deficit.value() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.coherence_a_reference.value() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(std::abs(r.residual_thm2) <= 1e-6);
  CHECK(r.chain_upper_slack >= -1e-6);
  CHECK(r.chain_lower_slack >= -1e-6);
  CHECK(r.discord_convergence.converged);
}

TEST_CASE("optimized trade-off report for |+>|+> shows the documented failure") {
  OptimizerConfig cfg;
  cfg.seed = Seed{96};
  const CorrelationReport r = tradeoff_optimized(plus_plus(), cfg);
  CHECK(r.discord.value() <= 1e-9);
  CHECK(r.deficit.value() <= 1e-9);
  CHECK(r.coherence_a_reference.value() == doctest::Approx(1.0).epsilon(1e-9));
  // The identity misses by exactly the reference coherence when discord is 0.
  CHECK(r.residual_thm2 == doctest::Approx(1.0).epsilon(1e-6));
  // The inequality chain still holds.
  CHECK(r.chain_upper_slack >= -1e-6);
  CHECK(r.chain_lower_slack >= -1e-6);
}

TEST_CASE("optimized trade-off report is exact on classical-quantum states") {
  OptimizerConfig cfg;
  cfg.seed = Seed{97};
  Eigen::MatrixXcd b0(2, 2), b1(2, 2);
  b0 << 0.8, 0, 0, 0.2;
  b1 << 0.1, 0, 0, 0.9;
  const BipartiteState cq = classical_quantum(0.35, DensityOperator::unchecked(b0),
                                              DensityOperator::unchecked(b1));
  const CorrelationReport r = tradeoff_optimized(cq, cfg);
  CHECK(r.discord.value() <= 1e-7);
  CHECK(r.deficit.value() <= 1e-7);
  CHECK(r.coherence_a_reference.value() <= 1e-9);
  CHECK(std::abs(r.residual_thm2) <= 1e-6);
}

TEST_CASE("deficit dominates discord on random states") {
  OptimizerConfig cfg;
  for (std::uint64_t seed = 150; seed < 170; ++seed) {
    const BipartiteState s = random_two_qubit(seed);
    cfg.seed = Seed{seed};
    const double d = discord(s, cfg).value.value();
    const double f = one_way_deficit(s, cfg).value.value();
    CHECK(d <= f + 1e-6);
  }
}

TEST_CASE("the optimized inequality chain holds on random states") {
  OptimizerConfig cfg;
  for (std::uint64_t seed = 180; seed < 190; ++seed) {
    const BipartiteState s = random_two_qubit(seed);
    cfg.seed = Seed{seed};
    const CorrelationReport r = tradeoff_optimized(s, cfg);
    CHECK(r.chain_upper_slack >= -1e-6);
    CHECK(r.chain_lower_slack >= -1e-6);
  }
}

TEST_CASE("discord and deficit ignore local unitaries on A") {
  OptimizerConfig cfg;
  for (std::uint64_t seed = 200; seed < 205; ++seed) {
    const BipartiteState s = random_two_qubit(seed);
    const Eigen::MatrixXcd u = random_unitary(2, Seed{seed + 50});
    Eigen::MatrixXcd joint(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        joint.block(i * 2, k * 2, 2, 2) =
            u(i, k) * Eigen::MatrixXcd::Identity(2, 2);
    const BipartiteState rotated(2, 2, rotate(s.op(), joint));

    cfg.seed = Seed{seed};
    CHECK(discord(s, cfg).value.value() ==
          doctest::Approx(discord(rotated, cfg).value.value()).epsilon(1e-6));
    CHECK(one_way_deficit(s, cfg).value.value() ==
          doctest::Approx(one_way_deficit(rotated, cfg).value.value()).epsilon(1e-6));
  }
}

TEST_CASE("given-measurement quantities vanish on a classical-quantum state's own basis") {
  const BipartiteState cq = classical_quantum(0.6, ginibre_density(2, 2, Seed{210}),
                                              ginibre_density(2, 2, Seed{211}));
  CHECK(discord_given(cq, comp2).value() == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(deficit_given(cq, comp2).value() == doctest::Approx(0.0).epsilon(1e-10));
}
