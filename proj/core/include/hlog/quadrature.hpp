#pragma once

// Definite integration with error control. Smooth integrands go through an
// adaptive 7/15-point Gauss-Kronrod pair; integrands with declared endpoint
// power behaviour go through a double-exponential (tanh-sinh) rule after a
// substitution that removes the declared exponent.

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <type_traits>
#include <utility>

namespace hlog {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultPanelCap = std::size_t{1} << 16;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

template <class T>
struct QuadResult {
  T value{};
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  /// (left, right): whether each endpoint was integrated as singular.
  std::pair<bool, bool> singular_flags{false, false};
};

/// Endpoint behaviour (x-a)^left near a and (b-x)^right near b.
/// Exponents must exceed -1. An exponent of 0 declares a logarithmic
/// blow-up; a positive exponent declares a non-smooth but bounded endpoint.
struct SingularitySpec {
  std::optional<double> left_exponent;
  std::optional<double> right_exponent;
};

/// A quadrature node with its distances to both ends of [a, b], each
/// computed without cancellation. Integrands that blow up at an endpoint
/// should use these distances rather than recomputing b - x.
struct Abscissa {
  double x;
  double from_left;
  double to_right;
};

namespace detail {

template <class T>
QuadResult<T> gauss_kronrod(const std::function<T(double)>& f, double a, double b, double tol,
                            std::size_t panel_cap, std::size_t initial_panels);

template <class T>
QuadResult<T> double_exponential(const std::function<T(const Abscissa&)>& f, double a, double b,
                                 const SingularitySpec& spec, double tol);

double circle_mean_impl(const std::function<double(double)>& modulus_at_angle, double p,
                        double tol);

template <class F, class Arg>
using value_type_for = std::conditional_t<
    std::is_convertible_v<std::invoke_result_t<F&, Arg>, double> &&
        !std::is_same_v<std::decay_t<std::invoke_result_t<F&, Arg>>, std::complex<double>>,
    double, std::complex<double>>;

}  // namespace detail

/// Adaptive Gauss-Kronrod on [a, b] until the summed |K15 - G7| estimate is
/// at most tol * max(1, |value|). Deterministic: the final sum runs over the
/// panels in left-to-right order with compensated summation. Throws
/// NonConvergenceError once `panel_cap` panels are in use.
template <class F>
auto integrate(F&& f, double a, double b, double tol = kDefaultTolerance,
               std::size_t panel_cap = kDefaultPanelCap) {
  using T = detail::value_type_for<F, double>;
  return detail::gauss_kronrod<T>(std::function<T(double)>(std::forward<F>(f)), a, b, tol,
                                  panel_cap, 1);
}

/// Tanh-sinh integration with the declared endpoint exponents removed by
/// the substitution (x - a) = v^k, k = 1/(1 + e), on each half interval.
/// `f` may take a double or an Abscissa. Throws DomainError for an
/// exponent <= -1 and NonConvergenceError when refinement stalls.
template <class F>
auto integrate_singular(F&& f, double a, double b, const SingularitySpec& spec,
                        double tol = kDefaultTolerance) {
  if constexpr (std::is_invocable_v<F&, const Abscissa&>) {
    using T = detail::value_type_for<F, const Abscissa&>;
    return detail::double_exponential<T>(std::function<T(const Abscissa&)>(std::forward<F>(f)),
                                         a, b, spec, tol);
  } else {
    using T = detail::value_type_for<F, double>;
    auto wrapped = [g = std::forward<F>(f)](const Abscissa& node) mutable -> T {
      return static_cast<T>(g(node.x));
    };
    return detail::double_exponential<T>(std::function<T(const Abscissa&)>(std::move(wrapped)),
                                         a, b, spec, tol);
  }
}

/// Integral over [a, inf) through x = a + u / (1 - u) on [0, 1).
template <class F>
auto integrate_halfline(F&& f, double a, double tol = kDefaultTolerance) {
  using T = detail::value_type_for<F, double>;
  auto mapped = [g = std::forward<F>(f), a](double u) mutable -> T {
    const double w = 1.0 - u;
    if (w <= 0.0) return T{};
    const T v = static_cast<T>(g(a + u / w));
    return v / (w * w);
  };
  return detail::gauss_kronrod<T>(std::function<T(double)>(std::move(mapped)), 0.0, 1.0, tol,
                                  kDefaultPanelCap, 1);
}

/// Integral mean M_p(r, f) = ((1/2pi) int |f(r e^{it})|^p dt)^(1/p) for
/// p >= 1, and the maximum of |f| on the circle for p = kInfinity.
/// Finite p: periodic trapezoid rule with grid doubling, switching to
/// adaptive Gauss-Kronrod when 256 nodes are not enough. p = inf: a
/// 4096-point grid with golden-section refinement around the top three
/// candidates.
template <class F>
double circle_mean(F&& f, double r, double p, double tol = kDefaultTolerance) {
  auto modulus = [g = std::forward<F>(f), r](double theta) mutable -> double {
    return std::abs(g(std::polar(r, theta)));
  };
  if (r == 0.0) return modulus(0.0);
  return detail::circle_mean_impl(std::function<double(double)>(std::move(modulus)), p, tol);
}

/// circle_mean for a caller that supplies theta -> |f(r e^{i theta})|
/// directly, e.g. to keep 1 - z accurate near z = 1.
inline double circle_mean_of_modulus(const std::function<double(double)>& modulus, double p,
                                     double tol = kDefaultTolerance) {
  return detail::circle_mean_impl(modulus, p, tol);
}

}  // namespace hlog
