#include "qcorr/canonical.hpp"

#include <charconv>

#include "qcorr/coherence.hpp"
#include "qcorr/sampler.hpp"

namespace qcorr {
namespace {

Eigen::VectorXcd amplitudes4(double a, double b, double c, double d) {
  Eigen::VectorXcd v(4);
  v << a, b, c, d;
  return v;
}

long long parse_integer(const std::string& text, const std::string& what) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UnknownState(what + " must be an integer, got '" + text + "'");
  }
  return value;
}

int parse_dim(const std::string& text) {
  const long long d = parse_integer(text, "dimension");
  if (d < 1 || d > 64) {
    throw UnknownState("dimension must lie in [1, 64], got " + text);
  }
  return static_cast<int>(d);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ' ';
    out += parts[i];
  }
  return out;
}

}  // namespace

PureState coherent_entangled_pair() {
  return PureState(amplitudes4(0.5, 0.5, -0.5, 0.5));
}

PureState bell_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return PureState(amplitudes4(r, 0.0, 0.0, r));
}

PureState plus_product() {
  return PureState(amplitudes4(0.5, 0.5, 0.5, 0.5));
}

StateFile named_state(const std::vector<std::string>& name_and_args) {
  if (name_and_args.empty()) throw UnknownState("missing state name");
  const std::string& name = name_and_args[0];
  const std::vector<std::string> args(name_and_args.begin() + 1, name_and_args.end());
  auto expect_args = [&](size_t n) {
    if (args.size() != n) {
      throw UnknownState(name + " expects " + std::to_string(n) + " argument(s), got " +
                         std::to_string(args.size()));
    }
  };

  StateFile sf;
  sf.label = join(name_and_args);
  if (name == "psi1") {
    expect_args(0);
    sf.dims = {2, 2};
    sf.matrix = from_pure(coherent_entangled_pair()).matrix();
  } else if (name == "psi2") {
    expect_args(0);
    sf.dims = {2, 2};
    sf.matrix = from_pure(bell_state()).matrix();
  } else if (name == "psi3") {
    expect_args(0);
    sf.dims = {2, 2};
    sf.matrix = from_pure(plus_product()).matrix();
  } else if (name == "mcs") {
    expect_args(1);
    const int d = parse_dim(args[0]);
    sf.dims = {d};
    sf.matrix = from_pure(maximally_coherent(d)).matrix();
  } else if (name == "mixed") {
    expect_args(1);
    const int d = parse_dim(args[0]);
    sf.dims = {d};
    sf.matrix = Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
  } else if (name == "haar") {
    expect_args(2);
    const int d = parse_dim(args[0]);
    const auto seed = static_cast<std::uint64_t>(parse_integer(args[1], "seed"));
    sf.dims = {d};
    sf.matrix = from_pure(haar_pure(d, Seed{seed})).matrix();
  } else if (name == "ginibre") {
    expect_args(3);
    const int d = parse_dim(args[0]);
    const long long r = parse_integer(args[1], "rank");
    const auto seed = static_cast<std::uint64_t>(parse_integer(args[2], "seed"));
    if (r < 1 || r > d) throw UnknownState("rank must lie in [1, d]");
    sf.dims = {d};
    sf.matrix = ginibre_density(d, static_cast<int>(r), Seed{seed}).matrix();
  } else {
    throw UnknownState("unknown state name '" + name + "'");
  }
  return sf;
}

}  // namespace qcorr
