#pragma once

#include <cstdint>
#include <random>

namespace evasion {

// splitmix64 finalizer. Used only to derive seeds, never as the main stream.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Substream seed for trajectory `index` of master seed `master`:
//   seed = mix64(mix64(master) + (index + 1) * 0x9E3779B97F4A7C15)
// The rule is part of the reproducibility contract and must not change.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Deterministic generator: the mt19937_64 engine is fully specified by the
// C++ standard and all variate transforms below are explicit, so streams are
// bit-reproducible across platforms and standard libraries. Not shared
// between threads; each worker owns its own instance.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  static SeededGenerator substream(std::uint64_t master, std::uint64_t index) {
    return SeededGenerator(substream_seed(master, index));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t raw() { return engine_(); }

  // Uniform on the open interval (0, 1), 53-bit resolution; never 0 or 1,
  // safe under log() and inverse CDFs.
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (two uniforms per draw, no cached state).
  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Gamma(shape, scale) by Marsaglia-Tsang; requires shape >= 1.
  double gamma(double shape, double scale);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace evasion
