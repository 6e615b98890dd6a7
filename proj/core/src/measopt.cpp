#include "qcorr/measopt.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace qcorr {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kHalfPi = 0.5 * kPi;
// Golden-section stops once the bracket is this narrow.
constexpr double kCoordinateTol = 1e-10;

double wrap_phase(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0) w += kTwoPi;
  return w;
}

struct LineSearchResult {
  double x;
  double value;
};

/// Golden-section scan of f over [lo, hi]; returns the best probed point.
template <typename F>
LineSearchResult golden_section(F&& f, double lo, double hi) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  LineSearchResult best = fc <= fd ? LineSearchResult{c, fc} : LineSearchResult{d, fd};
  while (b - a > kCoordinateTol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc < best.value) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd < best.value) best = {d, fd};
    }
  }
  return best;
}

struct StartOutcome {
  double value = std::numeric_limits<double>::infinity();
  ParamVector argmin;
  double final_improvement = 0.0;
  int sweeps = 0;
};

}  // namespace

ParamVector ParamVector::canonicalized() const {
  ParamVector out = *this;
  const int pairs = dim * (dim - 1) / 2;
  for (int q = 0; q < pairs; ++q) {
    double theta = out.params[2 * q];
    double phi = out.params[2 * q + 1];
    if (dim == 2) {
      theta = std::fmod(theta, kPi);
      if (theta < 0) theta += kPi;
      if (theta > kHalfPi) {
        theta = kPi - theta;
        phi += kPi;
      }
    }
    out.params[2 * q] = theta;
    out.params[2 * q + 1] = wrap_phase(phi);
  }
  return out;
}

MeasurementBasis MeasurementBasis::computational(int dim) {
  return MeasurementBasis(Eigen::MatrixXcd::Identity(dim, dim));
}

MeasurementBasis MeasurementBasis::from_columns(Eigen::MatrixXcd columns, double tol) {
  if (columns.rows() != columns.cols()) {
    throw DimensionMismatch("basis matrix must be square",
                            static_cast<int>(columns.rows()),
                            static_cast<int>(columns.cols()));
  }
  const Eigen::MatrixXcd gram = columns.adjoint() * columns;
  const double residual =
      (gram - Eigen::MatrixXcd::Identity(columns.cols(), columns.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (residual > tol) throw NotOrthonormal(residual);
  return MeasurementBasis(std::move(columns));
}

MeasurementBasis MeasurementBasis::rotated(const Eigen::MatrixXcd& u) const {
  if (u.rows() != columns_.rows()) {
    throw DimensionMismatch("rotation dimension", dim(), static_cast<int>(u.rows()));
  }
  return from_columns(u * columns_);
}

MeasurementBasis basis_from_params(const ParamVector& p) {
  const int d = p.dim;
  const int expected = ParamVector::expected_length(d);
  if (static_cast<int>(p.params.size()) != expected) {
    throw BadLength("parameter vector length", expected,
                    static_cast<int>(p.params.size()));
  }
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  int q = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j, ++q) {
      const double theta = p.params[2 * q];
      const double phi = p.params[2 * q + 1];
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const std::complex<double> e_pos(std::cos(phi), std::sin(phi));
      // Two-level rotation on rows i, j applied to the accumulator.
      const Eigen::RowVectorXcd row_i = u.row(i);
      const Eigen::RowVectorXcd row_j = u.row(j);
      u.row(i) = c * row_i - std::conj(e_pos) * s * row_j;
      u.row(j) = e_pos * s * row_i + c * row_j;
    }
  }
  return MeasurementBasis::from_columns(std::move(u));
}

MinimizeResult minimize(const std::function<double(const ParamVector&)>& objective,
                        int dim, const OptimizerConfig& cfg) {
  if (cfg.grid_points_per_angle < 1 || cfg.restarts < 1 || cfg.max_iters < 1 ||
      !(cfg.abs_tol > 0.0)) {
    throw Error("optimizer config fields must be positive");
  }
  const int n_coords = ParamVector::expected_length(dim);

  long evaluations = 0;
  auto eval = [&](const ParamVector& p) {
    ++evaluations;
    return objective(p);
  };

  // Coordinate box: even slots are angles, odd slots phases.
  auto coord_hi = [&](int c) { return (c % 2 == 0) ? kHalfPi : kTwoPi; };

  if (n_coords == 0) {
    ParamVector p{dim, {}};
    const double v = eval(p);
    return {v, p, {evaluations, 0, 0.0, 0, true}};
  }

  // Collect start points: grid best first (d = 2 only), then random restarts.
  std::vector<ParamVector> starts;
  if (dim == 2) {
    const int n = cfg.grid_points_per_angle;
    ParamVector grid_best{dim, {0.0, 0.0}};
    double best_value = std::numeric_limits<double>::infinity();
    ParamVector probe{dim, {0.0, 0.0}};
    for (int i = 0; i < n; ++i) {
      probe.params[0] = (n > 1) ? kHalfPi * i / (n - 1) : 0.0;
      for (int j = 0; j < n; ++j) {
        probe.params[1] = kTwoPi * j / n;
        const double v = eval(probe);
        if (v < best_value) {
          best_value = v;
          grid_best = probe;
        }
      }
    }
    starts.push_back(grid_best);
  }
  Prng rng(cfg.seed);
  for (int r = 0; r < cfg.restarts; ++r) {
    ParamVector p{dim, std::vector<double>(n_coords)};
    for (int c = 0; c < n_coords; ++c) p.params[c] = rng.uniform(0.0, coord_hi(c));
    starts.push_back(std::move(p));
  }

  int line_searches = 0;
  auto refine = [&](const ParamVector& start) {
    StartOutcome out;
    ParamVector x = start;
    double fx = eval(x);
    double improvement = std::numeric_limits<double>::infinity();
    while (improvement >= cfg.abs_tol) {
      const double sweep_begin = fx;
      for (int c = 0; c < n_coords; ++c) {
        if (line_searches >= cfg.max_iters) {
          if (fx < out.value) {
            out.value = fx;
            out.argmin = x;
          }
          throw MinimizeFailure(out.value, out.argmin, evaluations);
        }
        ++line_searches;
        const double keep = x.params[c];
        auto line = [&](double t) {
          x.params[c] = t;
          return eval(x);
        };
        const LineSearchResult ls = golden_section(line, 0.0, coord_hi(c));
        if (ls.value < fx) {
          x.params[c] = ls.x;
          fx = ls.value;
        } else {
          x.params[c] = keep;
        }
      }
      ++out.sweeps;
      improvement = sweep_begin - fx;
      out.final_improvement = improvement;
    }
    out.value = fx;
    out.argmin = x;
    return out;
  };

  std::vector<StartOutcome> outcomes;
  outcomes.reserve(starts.size());
  double best_so_far = std::numeric_limits<double>::infinity();
  ParamVector best_params;
  try {
    for (const ParamVector& s : starts) {
      StartOutcome o = refine(s);
      if (o.value < best_so_far) {
        best_so_far = o.value;
        best_params = o.argmin;
      }
      outcomes.push_back(std::move(o));
    }
  } catch (MinimizeFailure& failure) {
    if (failure.best_value > best_so_far) {
      throw MinimizeFailure(best_so_far, best_params, evaluations);
    }
    throw;
  }

  // Winner: smallest value, with ties inside abs_tol resolved to the lowest
  // start index. Independent of evaluation order.
  double min_value = std::numeric_limits<double>::infinity();
  for (const StartOutcome& o : outcomes) min_value = std::min(min_value, o.value);
  int winner = -1;
  for (int i = 0; i < static_cast<int>(outcomes.size()); ++i) {
    if (outcomes[i].value <= min_value + cfg.abs_tol) {
      winner = i;
      break;
    }
  }

  MinimizeResult result;
  result.value = outcomes[winner].value;
  result.argmin = outcomes[winner].argmin.canonicalized();
  result.metadata.evaluations = evaluations;
  result.metadata.best_start = winner;
  result.metadata.final_improvement = outcomes[winner].final_improvement;
  for (const StartOutcome& o : outcomes) result.metadata.sweeps += o.sweeps;
  result.metadata.converged = true;
  return result;
}

}  // namespace qcorr
