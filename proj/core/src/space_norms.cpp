#include "hlog/space_norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "compensated.hpp"
#include "hlog/errors.hpp"
#include "hlog/specfun.hpp"

namespace hlog {
namespace {

constexpr std::size_t kRayCount = 64;
constexpr std::size_t kRayProbePoints = 64;

std::string format_parameter(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream out;
  out << v;
  return out.str();
}

SupResult search(const std::function<double(const UnitPoint&)>& objective, double tol,
                 const NormSearchOptions& options, const char* op) {
  UnitSearchOptions unit;
  unit.x_max = options.x_max;
  unit.grid_points = options.grid_points;
  try {
    return supremum_unit(objective, tol, unit);
  } catch (const UnboundedError& e) {
    std::ostringstream msg;
    msg << op << ": objective is unbounded toward the boundary (" << e.what() << ")";
    throw UnboundedError(msg.str(), dyadic_growth(objective));
  }
}

// A grid point of the search with 1 - r recomputed from the rounded r, so
// that r and its complement describe the same point exactly.
std::pair<double, double> consistent(const UnitPoint& p) { return {p.r, 1.0 - p.r}; }

}  // namespace

SpaceSpec SpaceSpec::hardy(double p, bool log_weighted) {
  if (!(p >= 1.0)) throw DomainError("SpaceSpec::hardy: p must be at least 1");
  return {SpaceFamily::Hardy, p, log_weighted};
}

SpaceSpec SpaceSpec::bloch(double alpha, bool log_weighted) {
  if (!(alpha > 0.0) || std::isinf(alpha)) throw DomainError("SpaceSpec::bloch: alpha must be positive");
  return {SpaceFamily::Bloch, alpha, log_weighted};
}

std::string SpaceSpec::name() const {
  std::string out = (family == SpaceFamily::Hardy) ? "H^" : "B^";
  out += format_parameter(parameter);
  if (log_weighted) out += "_log";
  return out;
}

DiskFunction DiskFunction::from(const TestFunction& fn) {
  DiskFunction f;
  f.value = [fn](Complex, Complex w) { return eval_at_complement(fn, w); };
  f.derivative = [fn](Complex, Complex w) { return eval_derivative_at_complement(fn, w); };
  f.nonnegative_coefficients = has_nonnegative_coefficients(fn);
  return f;
}

DiskFunction DiskFunction::from(const CoefficientSeries& s) {
  DiskFunction f;
  f.value = [s](Complex z, Complex) { return eval_series(s, z).value; };
  f.derivative = [d = derivative_series(s)](Complex z, Complex) {
    return d.coeffs.empty() ? Complex{0.0, 0.0} : eval_series(d, z).value;
  };
  f.nonnegative_coefficients = std::all_of(s.coeffs.begin(), s.coeffs.end(), [](const Complex& a) {
    return a.imag() == 0.0 && a.real() >= 0.0;
  });
  return f;
}

std::pair<Complex, Complex> circle_point(double r, double complement, double theta) {
  const double half = std::sin(0.5 * theta);
  const Complex z = std::polar(r, theta);
  const Complex w{complement + 2.0 * r * half * half, -r * std::sin(theta)};
  return {z, w};
}

SupResult hardy_sup(const DiskFunction& f, double p, bool log_weighted, double tol,
                    const NormSearchOptions& options) {
  if (!f.value) throw DomainError("hardy_sup: function has no value callback");
  const SpaceSpec space = SpaceSpec::hardy(p, log_weighted);
  auto objective = [&](const UnitPoint& point) {
    const auto [r, s] = consistent(point);
    double m;
    if (r == 0.0) {
      m = std::abs(f.value(0.0, 1.0));
    } else if (std::isinf(p) && f.nonnegative_coefficients) {
      m = std::abs(f.value(r, s));
    } else {
      auto modulus = [&](double theta) {
        const auto [z, w] = circle_point(r, s, theta);
        return std::abs(f.value(z, w));
      };
      m = circle_mean_of_modulus(modulus, p, tol);
    }
    return space.log_weighted ? m / log_weight_from_complement(s) : m;
  };
  return search(objective, tol, options, "hardy_norm");
}

SupResult bloch_sup(const DiskFunction& f, double alpha, bool log_weighted, double tol,
                    const NormSearchOptions& options) {
  if (!f.derivative) throw DomainError("bloch_sup: function has no derivative callback");
  const SpaceSpec space = SpaceSpec::bloch(alpha, log_weighted);
  auto along = [&](double theta) {
    return [&, theta](const UnitPoint& point) {
      const auto [r, s] = consistent(point);
      const auto [z, w] = (theta == 0.0) ? std::pair<Complex, Complex>{r, s} : circle_point(r, s, theta);
      const double value = std::pow(s * (1.0 + r), alpha) * std::abs(f.derivative(z, w));
      return space.log_weighted ? value / log_weight_from_complement(s) : value;
    };
  };
  if (f.nonnegative_coefficients) return search(along(0.0), tol, options, "bloch_seminorm");

  double best_theta = 0.0;
  double best_value = -1.0;
  for (std::size_t k = 0; k < kRayCount; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / kRayCount;
    const auto ray = along(theta);
    for (std::size_t i = 0; i < kRayProbePoints; ++i) {
      const double x = options.x_max * static_cast<double>(i) / (kRayProbePoints - 1);
      const double v = ray(UnitPoint::from_x(x));
      if (v > best_value) {
        best_value = v;
        best_theta = theta;
      }
    }
  }
  return search(along(best_theta), tol, options, "bloch_seminorm");
}

double hardy_norm(const DiskFunction& f, double p, bool log_weighted, double tol) {
  return hardy_sup(f, p, log_weighted, tol).value;
}
double hardy_norm(const TestFunction& fn, double p, bool log_weighted, double tol) {
  return hardy_norm(DiskFunction::from(fn), p, log_weighted, tol);
}
double hardy_norm(const CoefficientSeries& s, double p, bool log_weighted, double tol) {
  return hardy_norm(DiskFunction::from(s), p, log_weighted, tol);
}

double bloch_seminorm(const DiskFunction& f, double alpha, bool log_weighted, double tol) {
  return bloch_sup(f, alpha, log_weighted, tol).value;
}
double bloch_seminorm(const TestFunction& fn, double alpha, bool log_weighted, double tol) {
  return bloch_seminorm(DiskFunction::from(fn), alpha, log_weighted, tol);
}
double bloch_seminorm(const CoefficientSeries& s, double alpha, bool log_weighted, double tol) {
  return bloch_seminorm(DiskFunction::from(s), alpha, log_weighted, tol);
}

double bloch_norm(const DiskFunction& f, double alpha, bool log_weighted, double tol) {
  if (!f.value) throw DomainError("bloch_norm: function has no value callback");
  return std::abs(f.value(0.0, 1.0)) + bloch_seminorm(f, alpha, log_weighted, tol);
}
double bloch_norm(const TestFunction& fn, double alpha, bool log_weighted, double tol) {
  return bloch_norm(DiskFunction::from(fn), alpha, log_weighted, tol);
}
double bloch_norm(const CoefficientSeries& s, double alpha, bool log_weighted, double tol) {
  return bloch_norm(DiskFunction::from(s), alpha, log_weighted, tol);
}

double norm(const DiskFunction& f, const SpaceSpec& space, double tol) {
  if (space.family == SpaceFamily::Hardy) return hardy_norm(f, space.parameter, space.log_weighted, tol);
  return bloch_norm(f, space.parameter, space.log_weighted, tol);
}

GrowthWitness dyadic_growth(const std::function<double(const UnitPoint&)>& objective, int count) {
  GrowthWitness witness;
  for (int j = 1; j <= count; ++j) {
    const double s = std::ldexp(1.0, -j);
    const UnitPoint point{1.0 - s, s, static_cast<double>(j) * std::numbers::ln2};
    witness.abscissae.push_back(point.r);
    witness.values.push_back(objective(point));
  }
  return witness;
}

double i_c(double c, double r, double tol) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("i_c: r must lie in [0, 1)");
  if (!std::isfinite(c)) throw DomainError("i_c: c must be finite");
  if (r == 0.0) return 1.0;
  const double s = 1.0 - r;
  auto modulus = [&](double theta) {
    const double half = std::sin(0.5 * theta);
    return std::pow(s * s + 4.0 * r * half * half, -0.5 * (1.0 + c));
  };
  return circle_mean_of_modulus(modulus, 1.0, tol);
}

IcBand i_c_band(double c, double r, double tol) {
  const double value = i_c(c, r, tol);
  IcBand band{c, r, value, 1.0, 1.0};
  if (c < 0.0) {
    band.upper = gamma(-c) / std::pow(gamma(0.5 * (1.0 - c)), 2);
  } else if (c > 0.0) {
    band.scaled = std::pow((1.0 - r) * (1.0 + r), c) * value;
    band.upper = gamma(c) / std::pow(gamma(0.5 * (1.0 + c)), 2);
  } else {
    if (r == 0.0) throw DomainError("i_c_band: the c = 0 band needs r > 0");
    const double one_minus_r2 = (1.0 - r) * (1.0 + r);
    band.scaled = r * r * value / -std::log(one_minus_r2);
    band.lower = 1.0 / std::numbers::pi;
  }
  return band;
}

std::pair<double, double> hardy_inequality_gap(const CoefficientSeries& s, double tol) {
  detail::CompensatedSum lhs;
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
    lhs.add(std::abs(s.coeffs[n]) / static_cast<double>(n + 1));
  }
  return {lhs.result<double>(), std::numbers::pi * hardy_norm(s, 1.0, false, tol)};
}

}  // namespace hlog
