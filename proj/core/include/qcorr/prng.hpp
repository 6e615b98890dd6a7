#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qcorr {

/// Seed for every stochastic component of the toolkit.
struct Seed {
  std::uint64_t value = 0;
};

/// Deterministic random source with pinned bit-level behaviour.
///
/// The engine is std::mt19937_64 (fully specified by the standard) and the
/// real/complex mappings below are written out explicitly instead of going
/// through std::uniform_real_distribution / std::normal_distribution, whose
/// output sequences differ between standard-library implementations. Same
/// seed, same platform-independent stream. Do not change the mappings.
class Prng {
 public:
  explicit Prng(Seed seed) : engine_(seed.value) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe as a logarithm argument.
  double uniform_open() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard complex normal via Box-Muller: real and imaginary parts are
  /// independent N(0, 1).
  std::complex<double> complex_normal() {
    const double r = std::sqrt(-2.0 * std::log(uniform_open()));
    const double angle = 2.0 * pi() * uniform();
    return {r * std::cos(angle), r * std::sin(angle)};
  }

  std::uint64_t next_u64() { return engine_(); }

  static constexpr double pi() { return 3.141592653589793238462643383279502884; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qcorr
