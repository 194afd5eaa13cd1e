#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace ria {

/// Derives decorrelated child seeds from a trial seed, so the channel process,
/// precoder draws and combination coefficients each get an independent stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Circularly-symmetric complex Gaussian, zero mean, E[|z|^2] = 1.
/// Box-Muller on the raw engine output keeps draws reproducible for a given
/// seed independent of the standard library's distribution internals.
class ComplexGaussian {
 public:
  explicit ComplexGaussian(std::uint64_t seed) : rng_(seed) {}

  std::complex<double> operator()() {
    double u1 = uniform();
    double u2 = uniform();
    double radius = std::sqrt(-std::log1p(-u1));  // each component N(0, 1/2)
    double angle = 2.0 * M_PI * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  double uniform() {
    // in [0, 1), 53-bit resolution
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }
  std::mt19937_64 rng_;
};

}  // namespace ria
