#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlog {

/// Argument outside the domain of an operation (|z| >= 1, bad parameter, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a pole, e.g. Gamma at a nonpositive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical procedure hit its work cap before reaching the requested
/// tolerance. Carries the best value and error estimate seen so far.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, std::complex<double> best_value,
                      double error_estimate);

  std::complex<double> best_value() const noexcept { return best_value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  std::complex<double> best_value_;
  double error_estimate_;
};

/// Values of a boundary objective sampled along an approach to the edge of
/// its domain, e.g. r_j = 1 - 2^-j. Used as evidence that a supremum is
/// infinite.
struct GrowthWitness {
  std::vector<double> abscissae;
  std::vector<double> values;

  bool strictly_increasing(std::size_t from = 0) const;
  /// values[last] / values[first]; 0 when values[first] is not positive.
  double growth_factor(std::size_t first, std::size_t last) const;
  /// Power-rate divergence: strictly increasing over [first, last] and
  /// values[last] > factor * values[first].
  bool grows_by(std::size_t first, std::size_t last, double factor) const;
  /// Logarithmic-rate divergence: strictly increasing from `first` and the
  /// per-step increments do not decay below half of the first one.
  bool grows_linearly(std::size_t first) const;
};

/// The objective of a norm or supremum grows without bound toward the boundary.
class UnboundedError : public std::runtime_error {
 public:
  UnboundedError(const std::string& what, GrowthWitness witness);

  const GrowthWitness& witness() const noexcept { return witness_; }

 private:
  GrowthWitness witness_;
};

}  // namespace hlog
