#pragma once

// Seeded random inputs that are reproducible across standard libraries:
// the raw 64-bit engine output is mapped to doubles by hand rather than
// through std::uniform_real_distribution, whose algorithm is unspecified.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>

#include "hlog/catalog.hpp"

namespace hlog {

class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }
  /// Uniform on {0, ..., n-1}.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(next() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 engine_;
};

/// Polynomial of uniformly random degree in [0, max_degree] with
/// coefficients uniform in the square [-1, 1] x [-1, 1]. Exact series
/// (tail bound 0).
inline CoefficientSeries random_polynomial(UniformSource& source, std::size_t max_degree) {
  const std::size_t degree = source.index(max_degree + 1);
  CoefficientSeries s;
  s.coeffs.reserve(degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) {
    const double re = source.next(-1.0, 1.0);
    const double im = source.next(-1.0, 1.0);
    s.coeffs.emplace_back(re, im);
  }
  s.tail_bound = 0.0;
  return s;
}

}  // namespace hlog
