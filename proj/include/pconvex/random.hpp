#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace pconvex {

// mt19937_64 output is specified by the standard; the distributions below
// are written out so draws are identical on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)); }

  double normal() {
    double u1 = uniform();
    while (u1 <= 0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
  }

  std::vector<double> unit_vector(std::size_t k) {
    std::vector<double> v(k);
    double n2 = 0;
    while (n2 < 1e-12) {
      n2 = 0;
      for (double& x : v) {
        x = normal();
        n2 += x * x;
      }
    }
    const double inv = 1 / std::sqrt(n2);
    for (double& x : v) x *= inv;
    return v;
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pconvex
