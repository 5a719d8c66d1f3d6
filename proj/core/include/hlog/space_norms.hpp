#pragma once

// Norms on the Hardy spaces H^p and the alpha-Bloch spaces B^alpha, with
// and without the logarithmic weight log(e / (1-r)^2). Every supremum over
// the disk goes through the sup-search module; unbounded objectives raise
// UnboundedError carrying the values at r_j = 1 - 2^-j, j = 1..20.

#include <functional>
#include <string>
#include <utility>

#include "hlog/catalog.hpp"
#include "hlog/errors.hpp"
#include "hlog/quadrature.hpp"
#include "hlog/sup_search.hpp"

namespace hlog {

enum class SpaceFamily { Hardy, Bloch };

struct SpaceSpec {
  SpaceFamily family = SpaceFamily::Hardy;
  /// p for Hardy (>= 1 or kInfinity), alpha for Bloch (> 0).
  double parameter = 1.0;
  bool log_weighted = false;

  /// Throw DomainError for an invalid parameter.
  static SpaceSpec hardy(double p, bool log_weighted = false);
  static SpaceSpec bloch(double alpha, bool log_weighted = false);

  /// "H^1", "B^1.5_log", "H^inf_log", ...
  std::string name() const;
};

/// Search depth for norm suprema: x = -log(1-r) <= 32 keeps 1 - r at about
/// 1e-14, where r = 1 - (1 - r) is still exact to a few ulps.
inline constexpr double kNormSearchDepth = 32.0;

struct NormSearchOptions {
  double x_max = kNormSearchDepth;
  std::size_t grid_points = 512;
};

/// An analytic function on the disk described by callbacks that receive
/// both z and w = 1 - z, the latter accurate near z = 1.
struct DiskFunction {
  std::function<Complex(Complex z, Complex w)> value;
  std::function<Complex(Complex z, Complex w)> derivative;
  /// Taylor coefficients known to be nonnegative, so |f(z)| <= f(|z|) and
  /// |f'(z)| <= f'(|z|): suprema over the disk may be taken radially.
  bool nonnegative_coefficients = false;

  static DiskFunction from(const TestFunction& fn);
  static DiskFunction from(const CoefficientSeries& s);
};

/// r e^{i theta} with its complement 1 - r e^{i theta}, given r and 1 - r.
std::pair<Complex, Complex> circle_point(double r, double complement, double theta);

/// Supremum of M_p(r, f) (divided by the log weight when requested) over
/// r in [0, 1), with the full search report.
SupResult hardy_sup(const DiskFunction& f, double p, bool log_weighted, double tol,
                    const NormSearchOptions& options = {});

/// Supremum over the disk of (1-|z|^2)^alpha |f'(z)| (divided by the log
/// weight when requested). Radial when the coefficients are nonnegative;
/// otherwise 64 angles locate the best ray first.
SupResult bloch_sup(const DiskFunction& f, double alpha, bool log_weighted, double tol,
                    const NormSearchOptions& options = {});

double hardy_norm(const TestFunction& fn, double p, bool log_weighted, double tol);
double hardy_norm(const CoefficientSeries& s, double p, bool log_weighted, double tol);
double hardy_norm(const DiskFunction& f, double p, bool log_weighted, double tol);

double bloch_seminorm(const TestFunction& fn, double alpha, bool log_weighted, double tol);
double bloch_seminorm(const CoefficientSeries& s, double alpha, bool log_weighted, double tol);
double bloch_seminorm(const DiskFunction& f, double alpha, bool log_weighted, double tol);

/// |f(0)| + bloch_seminorm.
double bloch_norm(const TestFunction& fn, double alpha, bool log_weighted, double tol);
double bloch_norm(const CoefficientSeries& s, double alpha, bool log_weighted, double tol);
double bloch_norm(const DiskFunction& f, double alpha, bool log_weighted, double tol);

/// Norm in the given space.
double norm(const DiskFunction& f, const SpaceSpec& space, double tol);

/// Values of a radial objective at r_j = 1 - 2^-j, j = 1..count.
GrowthWitness dyadic_growth(const std::function<double(const UnitPoint&)>& objective,
                            int count = 20);

/// I_c(r) = (1/2pi) int |1 - r e^{-i theta}|^-(1+c) d theta, 0 <= r < 1.
double i_c(double c, double r, double tol = kDefaultTolerance);

/// The scaled I_c value and the band it must lie in:
///   c < 0: I_c                              in [1, Gamma(-c) / Gamma^2((1-c)/2)]
///   c > 0: (1-r^2)^c I_c                    in [1, Gamma(c) / Gamma^2((1+c)/2)]
///   c = 0: r^2 I_0 / log(1 / (1-r^2))       in [1/pi, 1]   (r > 0)
struct IcBand {
  double c;
  double r;
  double scaled;
  double lower;
  double upper;

  bool holds(double slack = 0.0) const { return scaled >= lower - slack && scaled <= upper + slack; }
};

IcBand i_c_band(double c, double r, double tol = kDefaultTolerance);

/// (sum_{n<N} |a_n| / (n+1), pi * ||f||_{H^1}).
std::pair<double, double> hardy_inequality_gap(const CoefficientSeries& s, double tol);

}  // namespace hlog
