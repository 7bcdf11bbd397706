#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace osboost {

// SplitMix64 (Steele, Lea, Vigna). All randomness in this library goes
// through this engine so that a seed reproduces the same stream on every
// platform; the standard <random> distributions are implementation-defined
// and would not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, bound) via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Standard normal via Box-Muller.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Poisson draw by Knuth's product-of-uniforms method. Moderate means are
  // split into chunks so exp(-lambda) never underflows; the sum of
  // independent Poissons keeps the distribution exact. Very large means
  // fall back to the rounded normal approximation, whose relative error at
  // that scale is below the sampling noise.
  std::uint64_t next_poisson(double lambda) {
    if (lambda > 1000.0) {
      const double draw = lambda + std::sqrt(lambda) * next_gaussian();
      return draw <= 0.0 ? 0 : static_cast<std::uint64_t>(draw + 0.5);
    }
    std::uint64_t total = 0;
    while (lambda > 30.0) {
      total += poisson_small(30.0);
      lambda -= 30.0;
    }
    if (lambda > 0.0) total += poisson_small(lambda);
    return total;
  }

 private:
  std::uint64_t poisson_small(double lambda) {
    const double limit = std::exp(-lambda);
    std::uint64_t k = 0;
    double product = next_double();
    while (product > limit) {
      ++k;
      product *= next_double();
    }
    return k;
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace osboost
