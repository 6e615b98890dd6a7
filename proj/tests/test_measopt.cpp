#include <doctest.h>

#include <qcorr/correlations.hpp>
#include <qcorr/measopt.hpp>
#include <qcorr/sampler.hpp>

#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace qcorr;
using testutil::check_close;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Eigen::MatrixXcd projector(const Eigen::VectorXcd& v) { return v * v.adjoint(); }

}  // namespace

TEST_CASE("basis_from_params at the box origin is the computational basis") {
  const MeasurementBasis b = basis_from_params({2, {0.0, 0.0}});
  check_close(b.columns(), Eigen::MatrixXcd::Identity(2, 2));
}

TEST_CASE("basis_from_params at theta = pi/4 gives the plus/minus measurement") {
  const MeasurementBasis b = basis_from_params({2, {kPi / 4.0, 0.0}});
  Eigen::VectorXcd plus(2), minus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  check_close(projector(b.column(0)), projector(plus));
  check_close(projector(b.column(1)), projector(minus));
}

TEST_CASE("basis_from_params always yields orthonormal columns") {
  Prng rng(Seed{9});
  for (int d : {2, 3, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      ParamVector p{d, std::vector<double>(ParamVector::expected_length(d))};
      for (size_t c = 0; c < p.params.size(); ++c) {
        p.params[c] = rng.uniform(0.0, c % 2 == 0 ? kPi / 2.0 : 2.0 * kPi);
      }
      const MeasurementBasis b = basis_from_params(p);
      CHECK(testutil::max_abs_diff(b.columns().adjoint() * b.columns(),
                                   Eigen::MatrixXcd::Identity(d, d)) <= 1e-10);
    }
  }
}

TEST_CASE("basis_from_params rejects wrong parameter counts") {
  CHECK_THROWS_AS(basis_from_params({3, {0.0, 0.0}}), BadLength);
}

TEST_CASE("canonical wrapping folds qubit parameters onto the same measurement") {
  const ParamVector raw{2, {kPi / 2.0 + 0.3, 1.2}};
  const ParamVector wrapped = raw.canonicalized();
  CHECK(wrapped.params[0] >= 0.0);
  CHECK(wrapped.params[0] <= kPi / 2.0);
  CHECK(wrapped.params[1] >= 0.0);
  CHECK(wrapped.params[1] < 2.0 * kPi);
  const MeasurementBasis a = basis_from_params(raw);
  const MeasurementBasis b = basis_from_params(wrapped);
  check_close(projector(a.column(0)), projector(b.column(0)), 1e-12);
  check_close(projector(a.column(1)), projector(b.column(1)), 1e-12);
}

TEST_CASE("measurement bases validate their Gram matrix") {
  Eigen::MatrixXcd skew(2, 2);
  skew << 1.0, 0.5, 0.0, 1.0;
  CHECK_THROWS_AS(MeasurementBasis::from_columns(skew), NotOrthonormal);
}

TEST_CASE("minimize handles a constant objective in one sweep per start") {
  OptimizerConfig cfg;
  cfg.seed = Seed{1};
  const MinimizeResult r = minimize([](const ParamVector&) { return 2.5; }, 2, cfg);
  CHECK(r.value == 2.5);
  CHECK(r.metadata.converged);
  CHECK(r.metadata.final_improvement <= cfg.abs_tol);
  // one sweep for the grid start plus one per restart
  CHECK(r.metadata.sweeps == 1 + cfg.restarts);
}

TEST_CASE("minimize locates the minimum of a separable quadratic") {
  OptimizerConfig cfg;
  cfg.seed = Seed{2};
  auto objective = [](const ParamVector& p) {
    const double a = p.params[0] - 0.3;
    const double b = p.params[1] - 1.0;
    return a * a + b * b;
  };
  const MinimizeResult r = minimize(objective, 2, cfg);
  CHECK(r.value <= 1e-12);
  CHECK(r.argmin.params[0] == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(r.argmin.params[1] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("refinement never loses to the best scanned point") {
  OptimizerConfig cfg;
  cfg.seed = Seed{3};
  const BipartiteState s(2, 2, ginibre_density(4, 4, Seed{77}));
  const MeasurementScan scan(s);
  const int grid_evals = cfg.grid_points_per_angle * cfg.grid_points_per_angle;
  double best_scanned = std::numeric_limits<double>::infinity();
  int calls = 0;
  auto objective = [&](const ParamVector& p) {
    const double v = scan.discord_objective(basis_from_params(p).columns());
    // The first grid_evals calls are the coarse scan.
    if (calls < grid_evals) best_scanned = std::min(best_scanned, v);
    ++calls;
    return v;
  };
  const MinimizeResult r = minimize(objective, 2, cfg);
  CHECK(r.value <= best_scanned);
}

TEST_CASE("minimize is deterministic for identical inputs") {
  OptimizerConfig cfg;
  cfg.seed = Seed{4};
  const BipartiteState s(2, 2, ginibre_density(4, 4, Seed{78}));
  const MeasurementScan scan(s);
  auto objective = [&](const ParamVector& p) {
    return scan.deficit_objective(basis_from_params(p).columns());
  };
  const MinimizeResult a = minimize(objective, 2, cfg);
  const MinimizeResult b = minimize(objective, 2, cfg);
  CHECK(a.value == b.value);  // bitwise
  CHECK(a.argmin.params == b.argmin.params);
  CHECK(a.metadata.evaluations == b.metadata.evaluations);
  CHECK(a.metadata.best_start == b.metadata.best_start);
}

TEST_CASE("minimize reports the budget failure with the best point so far") {
  OptimizerConfig cfg;
  cfg.seed = Seed{5};
  cfg.max_iters = 1;
  auto objective = [](const ParamVector& p) {
    return std::cos(3.0 * p.params[0]) + std::sin(2.0 * p.params[1]);
  };
  try {
    minimize(objective, 2, cfg);
    FAIL("expected MinimizeFailure");
  } catch (const MinimizeFailure& e) {
    CHECK(std::isfinite(e.best_value));
    CHECK(e.best_params.params.size() == 2);
    CHECK(e.evaluations > 0);
  }
}

TEST_CASE("objectives are blind to column permutations and per-column phases") {
  const BipartiteState s(2, 2, ginibre_density(4, 4, Seed{79}));
  Prng rng(Seed{80});
  for (int trial = 0; trial < 5; ++trial) {
    const ParamVector p{2, {rng.uniform(0.0, kPi / 2.0), rng.uniform(0.0, 2.0 * kPi)}};
    const MeasurementBasis basis = basis_from_params(p);

    Eigen::MatrixXcd permuted(2, 2);
    permuted.col(0) = basis.column(1);
    permuted.col(1) = basis.column(0);
    const double a1 = rng.uniform(0.0, 2.0 * kPi);
    const double a2 = rng.uniform(0.0, 2.0 * kPi);
    permuted.col(0) *= std::complex<double>(std::cos(a1), std::sin(a1));
    permuted.col(1) *= std::complex<double>(std::cos(a2), std::sin(a2));
    const MeasurementBasis relabeled = MeasurementBasis::from_columns(permuted);

    CHECK(discord_given(s, basis).value() ==
          doctest::Approx(discord_given(s, relabeled).value()).epsilon(1e-10));
    CHECK(deficit_given(s, basis).value() ==
          doctest::Approx(deficit_given(s, relabeled).value()).epsilon(1e-10));
  }
}

TEST_CASE("minimize agrees with the exhaustive qubit grid oracle") {
  OptimizerConfig cfg;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BipartiteState s(2, 2, ginibre_density(4, 4, Seed{seed + 200}));
    cfg.seed = Seed{seed};

    const OptimizedCorrelation d = discord(s, cfg);
    const oracle::GridMin gd = oracle::grid_min_discord(s.op().matrix(), 2, 256);
    CHECK(std::abs(d.value.value() - gd.value) <= 1e-4);

    const OptimizedCorrelation f = one_way_deficit(s, cfg);
    const oracle::GridMin gf = oracle::grid_min_deficit(s.op().matrix(), 2, 256);
    CHECK(std::abs(f.value.value() - gf.value) <= 1e-4);
  }
}
