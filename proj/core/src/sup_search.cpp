#include "hlog/sup_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "hlog/errors.hpp"

namespace hlog {
namespace {

struct Grid {
  std::vector<double> xs;
  std::vector<double> values;
};

double checked(double v, double x) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "supremum search: objective is not finite at x = " << x;
    throw DomainError(msg.str());
  }
  return v;
}

std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo, double hi,
                                     double tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = checked(f(x1), x1);
  double f2 = checked(f(x2), x2);
  for (int it = 0; it < 300; ++it) {
    const double width = hi - lo;
    if (width * width <= tol || width <= 1e-15 * std::max(1.0, std::abs(hi))) break;
    if (f1 >= f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = checked(f(x1), x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = checked(f(x2), x2);
    }
  }
  return (f1 >= f2) ? std::pair{x1, f1} : std::pair{x2, f2};
}

// Search over precomputed grid values; arguments are grid coordinates.
SupResult search_grid(const Grid& grid, const std::function<double(double)>& f, double tol) {
  const auto& xs = grid.xs;
  const auto& v = grid.values;
  const std::size_t n = v.size();
  const double m = *std::max_element(v.begin(), v.end());
  const double slack = tol * std::max(1.0, std::abs(m));
  const std::size_t tie =
      static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [&](double y) { return y >= m - slack; }) -
                               v.begin());

  SupResult out;
  out.value = m;

  if (tie == 0) {
    const auto [x, fx] = golden_max(f, xs[0], xs[1], tol);
    if (fx > m + slack) {
      out.value = fx;
      out.arg = x;
      out.boundary = Attainment::Interior;
      out.error_estimate = slack;
      return out;
    }
    out.arg = xs[0];
    out.boundary = Attainment::AtZero;
    return out;
  }

  const double noise = 1e-14 * std::max(1.0, std::abs(m));
  bool rising_tail = true;
  for (std::size_t i = tie; i + 1 < n; ++i) {
    if (v[i + 1] < v[i] - noise) {
      rising_tail = false;
      break;
    }
  }
  if (rising_tail) {
    out.arg = xs.back();
    out.boundary = Attainment::AtBoundaryLimit;
    out.error_estimate = std::abs(v[n - 1] - v[n - 2]);
    return out;
  }

  std::vector<std::size_t> peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (v[i] >= v[i - 1] && v[i] >= v[i + 1]) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  if (peaks.size() > 3) peaks.resize(3);
  std::sort(peaks.begin(), peaks.end());

  double best_x = xs[tie];
  double best_v = v[tie];
  for (std::size_t i : peaks) {
    const auto [x, fx] = golden_max(f, xs[i - 1], xs[i + 1], tol);
    const double value = std::max(fx, v[i]);
    const double arg = (fx >= v[i]) ? x : xs[i];
    if (value > best_v + slack || (value > best_v && arg < best_x)) {
      best_v = value;
      best_x = arg;
    }
  }
  out.value = std::max(best_v, m);
  out.arg = best_x;
  out.boundary = Attainment::Interior;
  out.error_estimate = slack;
  return out;
}

[[noreturn]] void report_divergence(const Grid& grid, std::size_t from, const char* where) {
  GrowthWitness witness;
  witness.abscissae.assign(grid.xs.begin() + static_cast<std::ptrdiff_t>(from), grid.xs.end());
  witness.values.assign(grid.values.begin() + static_cast<std::ptrdiff_t>(from), grid.values.end());
  std::ostringstream msg;
  msg << where << ": objective grows by a factor " << grid.values.back() / grid.values[from]
      << " over the final decade";
  throw UnboundedError(msg.str(), std::move(witness));
}

}  // namespace

const char* to_string(Attainment a) noexcept {
  switch (a) {
    case Attainment::Interior: return "interior";
    case Attainment::AtZero: return "at-zero";
    case Attainment::AtBoundaryLimit: return "boundary-limit";
  }
  return "unknown";
}

UnitPoint UnitPoint::from_x(double x) { return {-std::expm1(-x), std::exp(-x), x}; }

UnitPoint UnitPoint::from_r(double r) { return {r, 1.0 - r, -std::log1p(-r)}; }

SupResult supremum_unit(const std::function<double(const UnitPoint&)>& g, double tol,
                        const UnitSearchOptions& options) {
  if (!(tol > 0.0)) throw DomainError("supremum_unit: tolerance must be positive");
  if (options.grid_points < 3 || !(options.x_max > 0.0)) {
    throw DomainError("supremum_unit: need at least three grid points and a positive depth");
  }
  auto f = [&g](double x) { return g(UnitPoint::from_x(x)); };
  Grid grid;
  const std::size_t n = options.grid_points;
  grid.xs.resize(n);
  grid.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = options.x_max * static_cast<double>(i) / static_cast<double>(n - 1);
    grid.xs[i] = x;
    grid.values[i] = (i == 0 && options.value_at_zero) ? *options.value_at_zero : checked(f(x), x);
  }

  SupResult out = search_grid(grid, f, tol);
  if (options.detect_divergence && out.boundary == Attainment::AtBoundaryLimit) {
    const double x_ref = grid.xs.back() - std::numbers::ln10;
    std::size_t j = n - 1;
    while (j > 0 && grid.xs[j] > x_ref) --j;
    if (grid.values[j] > 0.0 && grid.values.back() > 10.0 * grid.values[j]) {
      report_divergence(grid, j, "supremum_unit");
    }
  }
  out.arg = UnitPoint::from_x(out.arg).r;
  return out;
}

SupResult supremum_unit_r(const std::function<double(double)>& g, double tol,
                          UnitSearchOptions options) {
  options.x_max = std::min(options.x_max, kRadialResolutionLimit);
  return supremum_unit([&g](const UnitPoint& p) { return g(p.r); }, tol, options);
}

SupResult supremum_halfline(const std::function<double(double)>& g, double tol,
                            const HalflineSearchOptions& options) {
  if (!(tol > 0.0)) throw DomainError("supremum_halfline: tolerance must be positive");
  constexpr std::size_t uniform = 384;
  constexpr std::size_t logspaced = 128;
  Grid grid;
  for (std::size_t i = 0; i < uniform; ++i) {
    grid.xs.push_back(10.0 * static_cast<double>(i) / static_cast<double>(uniform - 1));
  }
  for (std::size_t k = 1; k <= logspaced; ++k) {
    grid.xs.push_back(10.0 * std::pow(6.0, static_cast<double>(k) / static_cast<double>(logspaced)));
  }
  grid.values.resize(grid.xs.size());
  for (std::size_t i = 0; i < grid.xs.size(); ++i) {
    grid.values[i] = (i == 0 && options.limit_at_zero) ? *options.limit_at_zero
                                                       : checked(g(grid.xs[i]), grid.xs[i]);
  }

  SupResult out = search_grid(grid, g, tol);
  const double slack = tol * std::max(1.0, std::abs(out.value));
  if (options.limit_at_infinity) {
    const double limit = *options.limit_at_infinity;
    if (limit > out.value + slack ||
        (out.boundary == Attainment::AtBoundaryLimit && limit > out.value)) {
      out.value = limit;
      out.arg = grid.xs.back();
      out.boundary = Attainment::AtBoundaryLimit;
      out.error_estimate = std::abs(limit - grid.values.back());
    }
  } else if (options.detect_divergence && out.boundary == Attainment::AtBoundaryLimit) {
    const double x_ref = grid.xs.back() / 10.0;
    std::size_t j = grid.xs.size() - 1;
    while (j > 0 && grid.xs[j] > x_ref) --j;
    if (grid.values[j] > 0.0 && grid.values.back() > 10.0 * grid.values[j]) {
      report_divergence(grid, j, "supremum_halfline");
    }
  }
  return out;
}

}  // namespace hlog
