#pragma once

// Analytic functions on the unit disk: truncated Taylor series and the
// closed-form extremal test functions used by the norm estimates.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hlog {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultTruncation = 2048;

/// Taylor coefficients a_0..a_{N-1}. When present, `tail_bound` certifies
/// |a_k| <= tail_bound for every k >= N.
struct CoefficientSeries {
  std::vector<Complex> coeffs;
  std::optional<double> tail_bound;

  std::size_t truncation_order() const noexcept { return coeffs.size(); }
};

struct SeriesValue {
  Complex value;
  /// tail_bound * |z|^N / (1 - |z|) when the series carries a tail bound.
  std::optional<double> error_bound;
};

enum class FunctionKind {
  Constant,            // f(z) = 1
  HalfLog,             // g(z) = 1/2 log((1+z)/(1-z))
  BlochAlphaExtremal,  // ((1-z^2)^(1-a) - 1) / (2(a-1)),  a > 0, a != 1
  HardyAlphaExtremal,  // (1-z)^(-a),  0 < a < 1
};

class TestFunction {
 public:
  static TestFunction constant();
  static TestFunction half_log();
  /// Throws DomainError unless alpha > 0 and alpha != 1.
  static TestFunction bloch_extremal(double alpha);
  /// Throws DomainError unless 0 < alpha < 1.
  static TestFunction hardy_extremal(double alpha);

  FunctionKind kind() const noexcept { return kind_; }
  /// Parameter of the extremal families, 0 for Constant and HalfLog.
  double alpha() const noexcept { return alpha_; }
  std::string name() const;

  friend bool operator==(const TestFunction&, const TestFunction&) = default;

 private:
  TestFunction(FunctionKind kind, double alpha) : kind_(kind), alpha_(alpha) {}

  FunctionKind kind_;
  double alpha_;
};

/// f(z) on the principal branch. Throws DomainError for |z| >= 1.
Complex eval(const TestFunction& fn, Complex z);

/// f(1 - w). Keeps full relative accuracy in the distance to the boundary
/// point z = 1, where every catalog function has its singularity.
Complex eval_at_complement(const TestFunction& fn, Complex w);

/// f'(z). Throws DomainError for |z| >= 1.
Complex eval_derivative(const TestFunction& fn, Complex z);

/// f'(1 - w), accurate near z = 1 like eval_at_complement.
Complex eval_derivative_at_complement(const TestFunction& fn, Complex w);

/// Power behaviour of f(t) as t -> 1- along the real axis: f(t) ~ (1-t)^e.
/// 0 marks a logarithmic blow-up; empty when f is analytic at t = 1.
std::optional<double> boundary_exponent(const TestFunction& fn);

/// d such that |a_k| decays like k^-d; empty for a finite Taylor series.
std::optional<double> coefficient_decay_order(const TestFunction& fn);

/// Every Taylor coefficient is real and nonnegative, so |f(z)| <= f(|z|)
/// and the same holds for every derivative.
bool has_nonnegative_coefficients(const TestFunction& fn);

/// First n Taylor coefficients with a tail bound taken from the explicit
/// coefficient formula. Throws DomainError for n == 0.
CoefficientSeries taylor_coeffs(const TestFunction& fn, std::size_t n = kDefaultTruncation);

/// Horner evaluation. Throws DomainError for |z| >= 1.
SeriesValue eval_series(const CoefficientSeries& s, Complex z);

/// Coefficients k a_k shifted down one index. The tail bound is dropped:
/// bounded a_k does not bound k a_k.
CoefficientSeries derivative_series(const CoefficientSeries& s);

}  // namespace hlog
