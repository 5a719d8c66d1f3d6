#pragma once

// The Hilbert matrix operator H acting on analytic functions of the disk:
// as the matrix (1/(n+k+1)) on Taylor coefficients, as the integral
// Hf(z) = int_0^1 f(t) / (1 - tz) dt, through its derivative kernel, and as
// the average int_0^1 T_t f dt of weighted composition operators.

#include <cstddef>

#include "hlog/catalog.hpp"
#include "hlog/quadrature.hpp"

namespace hlog {

/// w_t(z) = 1 / (1 - (1-t) z) and phi_t(z) = t w_t(z) for 0 < t < 1.
class CompositionSymbol {
 public:
  /// Throws DomainError unless 0 < t < 1.
  explicit CompositionSymbol(double t);

  double t() const noexcept { return t_; }
  Complex weight(Complex z) const;
  Complex map(Complex z) const;
  /// 1 - phi_t(z) = (1-t)(1-z) / (1 - (1-t) z), without cancellation.
  Complex map_complement(Complex z) const;

 private:
  double t_;
};

/// b_n = sum_{k<N} a_k / (n+k+1) for n < out_order, summed in index order
/// with compensation. A tail bound is attached only when the input series
/// is exact (tail bound 0): then |b_n| <= sum |a_k| / (out_order + 1) for
/// every n >= out_order. Throws DomainError for out_order == 0.
CoefficientSeries apply_matrix(const CoefficientSeries& s, std::size_t out_order);

/// Coefficients of H fn with the input truncation error removed by two
/// levels of Richardson extrapolation over input orders N, 2N, 4N
/// (N = base_order). The truncation error of b_n behaves like N^-d with d
/// the coefficient decay order, then N^-(d+1). Throws DomainError when the
/// series of H fn does not converge (d <= 0).
CoefficientSeries apply_matrix_extrapolated(const TestFunction& fn, std::size_t out_order,
                                            std::size_t base_order = kDefaultTruncation);

/// Hf(z) = int_0^1 f(t) / (1 - tz) dt. The declared boundary exponent of
/// fn routes the integral through integrate_singular. Throws DomainError
/// for |z| >= 1 or when f is not integrable on [0, 1).
Complex apply_integral(const TestFunction& fn, Complex z, double tol = kDefaultTolerance);

/// (Hf)'(z) = int_0^1 t f(t) / (1 - tz)^2 dt.
Complex derivative_at(const TestFunction& fn, Complex z, double tol = kDefaultTolerance);

/// (Hf)'(z) = int_0^1 t f(phi_t(z)) / ((1 - (1-t) z)(1 - z)) dt, the
/// derivative kernel after moving the path of integration. |z| < 1.
Complex derivative_at_pathshifted(const TestFunction& fn, Complex z,
                                  double tol = kDefaultTolerance);

/// The same integral at a real point r given together with its complement
/// s = 1 - r, so that points within rounding distance of 1 stay usable.
double derivative_at_pathshifted(const TestFunction& fn, double r, double complement,
                                 double tol = kDefaultTolerance);

/// T_t f(z) = w_t(z) f(phi_t(z)).
Complex apply_T(const TestFunction& fn, double t, Complex z);

/// int_0^1 T_t f(z) dt, which equals Hf(z).
Complex composition_integral(const TestFunction& fn, Complex z, double tol = kDefaultTolerance);

/// The same with w = 1 - z supplied by the caller.
Complex composition_integral(const TestFunction& fn, Complex z, Complex w,
                             double tol = kDefaultTolerance);

}  // namespace hlog
