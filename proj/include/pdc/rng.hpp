// pdcsim: classical wave-optics simulation of parametric down- and up-conversion
// Licensed under the Apache License, Version 2.0 <http://www.apache.org/licenses/LICENSE-2.0>

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace pdc {

/// splitmix64 finalizer; used to whiten seeds and derive substreams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seed for substream `index` of a master seed. Substreams are independent of
/// execution order: stream i of a run is a pure function of (master, i).
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master + 0x9E3779B97F4A7C15ull * (index + 1);
  return splitmix64(state);
}

/// Circular complex Gaussian sampler for zeropoint ("vacuum") mode amplitudes:
/// real and imaginary parts are independent N(0, scale/2), so the mean of
/// |a|^2 is `scale` and |a|^2 is exponentially distributed.
///
/// The Gaussian is drawn in polar form from explicit uniforms (two engine
/// draws per sample) rather than std::normal_distribution, whose algorithm
/// is implementation-defined; identical seeds therefore reproduce identical
/// streams bit for bit.
class ZeropointSampler {
 public:
  explicit ZeropointSampler(std::uint64_t seed, double scale = 1.0)
      : engine_(whiten(seed)), scale_(scale) {}

  /// Uniform double in [0, 1) from the top 53 bits of one engine draw.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::complex<double> sample() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-scale_ * std::log(u1));
    return std::polar(r, 2.0 * std::numbers::pi * u2);
  }

  double scale() const { return scale_; }

 private:
  static std::uint64_t whiten(std::uint64_t seed) {
    std::uint64_t s = seed;
    return splitmix64(s);
  }

  std::mt19937_64 engine_;
  double scale_;
};

inline std::complex<double> sample_vacuum_mode(ZeropointSampler& sampler) {
  return sampler.sample();
}

}  // namespace pdc
