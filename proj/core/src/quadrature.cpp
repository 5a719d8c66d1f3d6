#include "hlog/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "compensated.hpp"
#include "hlog/errors.hpp"

namespace hlog::detail {
namespace {

using Complex = std::complex<double>;

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

// Distances below this are replaced by it; the integrand is frozen at its
// last representable value instead of being sampled at an underflowed point.
constexpr double kDistanceFloor = 1e-280;
constexpr double kTanhSinhRange = 4.5;
constexpr int kTanhSinhMaxLevel = 10;

bool finite(double v) { return std::isfinite(v); }
bool finite(const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

template <class T>
T checked(T v, double x, const char* op) {
  if (!finite(v)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << op << ": integrand is not finite at x = " << x;
    throw DomainError(msg.str());
  }
  return v;
}

template <class T>
struct Panel {
  double a;
  double b;
  T value;
  double error;
};

template <class T>
Panel<T> kronrod_panel(const std::function<T(double)>& f, double a, double b,
                       std::size_t& evaluations) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = checked(f(c), c, "integrate");
  T kronrod = fc * kKronrodWeights[7];
  T gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = h * kKronrodNodes[j];
    const T f1 = checked(f(c - dx), c - dx, "integrate");
    const T f2 = checked(f(c + dx), c + dx, "integrate");
    kronrod += kKronrodWeights[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1 + f2);
  }
  evaluations += 15;
  return {a, b, kronrod * h, std::abs((kronrod - gauss) * h)};
}

template <class T>
struct ByError {
  bool operator()(const Panel<T>& x, const Panel<T>& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

template <class T>
std::pair<T, double> exact_totals(std::vector<Panel<T>> panels) {
  std::sort(panels.begin(), panels.end(),
            [](const Panel<T>& x, const Panel<T>& y) { return x.a < y.a; });
  CompensatedSum value;
  CompensatedSum error;
  for (const auto& p : panels) {
    value.add(p.value);
    error.add(p.error);
  }
  return {value.template result<T>(), error.template result<double>()};
}

// A priority queue whose storage can be inspected for the final sum.
template <class T>
class PanelQueue : public std::priority_queue<Panel<T>, std::vector<Panel<T>>, ByError<T>> {
 public:
  const std::vector<Panel<T>>& storage() const { return this->c; }
};

}  // namespace

template <class T>
QuadResult<T> gauss_kronrod(const std::function<T(double)>& f, double a, double b, double tol,
                            std::size_t panel_cap, std::size_t initial_panels) {
  if (!(std::isfinite(a) && std::isfinite(b))) throw DomainError("integrate: endpoints must be finite");
  if (!(tol > 0.0)) throw DomainError("integrate: tolerance must be positive");
  QuadResult<T> out;
  if (a == b) return out;
  if (b < a) {
    out = gauss_kronrod(f, b, a, tol, panel_cap, initial_panels);
    out.value = -out.value;
    return out;
  }

  PanelQueue<T> queue;
  T running_value{};
  double running_error = 0.0;
  const std::size_t n0 = std::max<std::size_t>(1, initial_panels);
  for (std::size_t i = 0; i < n0; ++i) {
    const double lo = a + (b - a) * static_cast<double>(i) / static_cast<double>(n0);
    const double hi = (i + 1 == n0) ? b : a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(n0);
    auto p = kronrod_panel(f, lo, hi, out.evaluations);
    running_value += p.value;
    running_error += p.error;
    queue.push(p);
  }

  while (true) {
    if (running_error <= tol * std::max(1.0, std::abs(running_value))) {
      const auto [value, error] = exact_totals(queue.storage());
      running_value = value;
      running_error = error;
      if (error <= tol * std::max(1.0, std::abs(value))) {
        out.value = value;
        out.error_estimate = error;
        return out;
      }
    }
    const Panel<T> worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (queue.size() >= panel_cap || !(mid > worst.a && mid < worst.b)) {
      const auto [value, error] = exact_totals(queue.storage());
      std::ostringstream msg;
      msg << "integrate: no convergence on [" << a << ", " << b << "] with " << queue.size()
          << " panels (error estimate " << error << ")";
      throw NonConvergenceError(msg.str(), Complex(value), error);
    }
    queue.pop();
    auto left = kronrod_panel(f, worst.a, mid, out.evaluations);
    auto right = kronrod_panel(f, mid, worst.b, out.evaluations);
    running_value += left.value + right.value - worst.value;
    running_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
}

namespace {

// int_0^V g(v) dv by tanh-sinh with level doubling; v = 0 is the end where
// the nodes accumulate with full relative accuracy.
template <class T>
QuadResult<T> tanh_sinh_half(const std::function<T(double)>& g, double V, double tol) {
  QuadResult<T> out;
  CompensatedSum total;
  auto add_node = [&](double u) {
    const double s = 0.5 * std::numbers::pi * std::sinh(u);
    const double q = std::exp(-2.0 * std::abs(s));
    const double weight = V * 2.0 * q / ((1.0 + q) * (1.0 + q)) * 0.5 * std::numbers::pi * std::cosh(u);
    if (weight == 0.0) return;
    const double v = (s <= 0.0) ? V * q / (1.0 + q) : V / (1.0 + q);
    if (!(v > 0.0 && v < V)) return;
    total.add(weight * checked(g(v), v, "integrate_singular"));
    ++out.evaluations;
  };

  double h = 1.0;
  const int j_max = static_cast<int>(std::ceil(kTanhSinhRange));
  for (int j = -j_max; j <= j_max; ++j) add_node(static_cast<double>(j));
  T previous = h * total.template result<T>();
  for (int level = 1; level <= kTanhSinhMaxLevel; ++level) {
    h *= 0.5;
    const int n = static_cast<int>(std::ceil(kTanhSinhRange / h));
    for (int j = -n; j <= n; ++j) {
      if (j % 2 != 0) add_node(static_cast<double>(j) * h);
    }
    const T current = h * total.template result<T>();
    const double diff = std::abs(current - previous);
    if (level >= 3 && diff <= tol * std::max(1.0, std::abs(current))) {
      out.value = current;
      out.error_estimate = diff;
      return out;
    }
    previous = current;
  }
  std::ostringstream msg;
  msg << "integrate_singular: tanh-sinh did not settle after " << out.evaluations
      << " evaluations";
  throw NonConvergenceError(msg.str(), Complex(previous), std::abs(previous));
}

void validate_exponent(const std::optional<double>& e) {
  if (!e) return;
  if (!std::isfinite(*e) || *e <= -1.0) {
    throw DomainError("integrate_singular: endpoint exponent must be finite and exceed -1");
  }
}

}  // namespace

template <class T>
QuadResult<T> double_exponential(const std::function<T(const Abscissa&)>& f, double a, double b,
                                 const SingularitySpec& spec, double tol) {
  validate_exponent(spec.left_exponent);
  validate_exponent(spec.right_exponent);
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw DomainError("integrate_singular: endpoints must be finite");
  }
  if (!(tol > 0.0)) throw DomainError("integrate_singular: tolerance must be positive");
  QuadResult<T> out;
  out.singular_flags = {spec.left_exponent.has_value(), spec.right_exponent.has_value()};
  if (a == b) return out;
  if (b < a) {
    auto flipped = [&f](const Abscissa& node) {
      return f(Abscissa{node.x, node.to_right, node.from_left});
    };
    out = double_exponential<T>(flipped, b, a, {spec.right_exponent, spec.left_exponent}, tol);
    out.value = -out.value;
    std::swap(out.singular_flags.first, out.singular_flags.second);
    return out;
  }

  const double length = b - a;
  const double half = 0.5 * length;

  auto side = [&](const std::optional<double>& exponent, bool left) {
    const double k = (exponent && *exponent < 0.0) ? 1.0 / (1.0 + *exponent) : 1.0;
    const double v_floor = std::pow(kDistanceFloor, 1.0 / k);
    const double V = std::pow(half, 1.0 / k);
    std::function<T(double)> g = [&, k, v_floor, left](double v) -> T {
      const double ve = std::max(v, v_floor);
      const double d = (k == 1.0) ? ve : std::pow(ve, k);
      const Abscissa node = left ? Abscissa{a + d, d, length - d} : Abscissa{b - d, length - d, d};
      const double jacobian = (k == 1.0) ? 1.0 : k * std::pow(ve, k - 1.0);
      return f(node) * jacobian;
    };
    return tanh_sinh_half<T>(g, V, tol);
  };

  const auto lo = side(spec.left_exponent, true);
  const auto hi = side(spec.right_exponent, false);
  out.value = lo.value + hi.value;
  out.error_estimate = lo.error_estimate + hi.error_estimate;
  out.evaluations = lo.evaluations + hi.evaluations;
  return out;
}

double circle_mean_impl(const std::function<double(double)>& modulus, double p, double tol) {
  if (!(p >= 1.0)) throw DomainError("circle_mean: p must be at least 1");
  constexpr double two_pi = 2.0 * std::numbers::pi;

  if (std::isinf(p)) {
    constexpr std::size_t n = 4096;
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = checked(modulus(two_pi * static_cast<double>(i) / n), 0.0, "circle_mean");
    }
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < n; ++i) {
      const double prev = values[(i + n - 1) % n];
      const double next = values[(i + 1) % n];
      if (values[i] >= prev && values[i] >= next) peaks.push_back(i);
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
    double best = *std::max_element(values.begin(), values.end());
    const double step = two_pi / n;
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    for (std::size_t c = 0; c < std::min<std::size_t>(3, peaks.size()); ++c) {
      const double centre = step * static_cast<double>(peaks[c]);
      double lo = centre - step, hi = centre + step;
      double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
      double f1 = modulus(x1), f2 = modulus(x2);
      for (int it = 0; it < 200 && (hi - lo) > 1e-13; ++it) {
        if (f1 >= f2) {
          hi = x2; x2 = x1; f2 = f1;
          x1 = hi - inv_phi * (hi - lo);
          f1 = modulus(x1);
        } else {
          lo = x1; x1 = x2; f1 = f2;
          x2 = lo + inv_phi * (hi - lo);
          f2 = modulus(x2);
        }
      }
      best = std::max({best, f1, f2});
    }
    return best;
  }

  auto power = [&](double theta) { return std::pow(modulus(theta), p); };
  std::size_t n = 64;
  CompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    sum.add(checked(power(two_pi * static_cast<double>(i) / n), 0.0, "circle_mean"));
  }
  double previous = std::pow(sum.result<double>() / n, 1.0 / p);
  while (n < (std::size_t{1} << 8)) {
    for (std::size_t i = 0; i < n; ++i) {
      const double theta = two_pi * (static_cast<double>(i) + 0.5) / n;
      sum.add(checked(power(theta), theta, "circle_mean"));
    }
    n *= 2;
    const double current = std::pow(sum.result<double>() / n, 1.0 / p);
    if (std::abs(current - previous) <= tol * std::max(1.0, current)) return current;
    previous = current;
  }

  std::function<double(double)> integrand = power;
  const auto result = gauss_kronrod<double>(integrand, 0.0, two_pi, tol, kDefaultPanelCap, 8);
  return std::pow(result.value / two_pi, 1.0 / p);
}

template QuadResult<double> gauss_kronrod<double>(const std::function<double(double)>&, double,
                                                  double, double, std::size_t, std::size_t);
template QuadResult<Complex> gauss_kronrod<Complex>(const std::function<Complex(double)>&, double,
                                                    double, double, std::size_t, std::size_t);
template QuadResult<double> double_exponential<double>(const std::function<double(const Abscissa&)>&,
                                                       double, double, const SingularitySpec&,
                                                       double);
template QuadResult<Complex> double_exponential<Complex>(
    const std::function<Complex(const Abscissa&)>&, double, double, const SingularitySpec&, double);

}  // namespace hlog::detail
