#include "hlog/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hlog/errors.hpp"

namespace hlog {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Lanczos partial-fraction sum A_g(x) for Gamma(x + 1).
double lanczos_sum(double x) {
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (x + static_cast<double>(i));
  }
  return sum;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) with exact zeros at the integers and no loss for large |x|.
double sin_pi(double x) {
  const double n = std::round(2.0 * x);
  const double f = x - 0.5 * n;  // |f| <= 1/4
  const double s = std::sin(std::numbers::pi * f);
  const double c = std::cos(std::numbers::pi * f);
  switch (static_cast<long long>(n) & 3) {
    case 0: return s;
    case 1: return c;
    case 2: return -s;
    default: return -c;
  }
}

}  // namespace

double log_weight(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("log_weight: r must lie in [0, 1)");
  return 1.0 - 2.0 * std::log1p(-r);
}

double log_weight_from_complement(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("log_weight_from_complement: s must lie in (0, 1]");
  return 1.0 - 2.0 * std::log(s);
}

double gamma(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("gamma: pole at a nonpositive integer");
  if (std::isnan(x)) return x;
  if (x < 0.5) {
    return std::numbers::pi / (sin_pi(x) * gamma(1.0 - x));
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  // t^(x-1/2) split in two halves so that large x does not overflow early.
  const double half_power = std::pow(t, 0.5 * (xm1 + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * std::exp(-t) * half_power *
         lanczos_sum(xm1);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  if (x < 0.5) {
    return std::log(std::numbers::pi / sin_pi(x)) - log_gamma(1.0 - x);
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(xm1));
}

double beta(double s, double t) {
  if (!(s > 0.0 && t > 0.0)) throw DomainError("beta: both arguments must be positive");
  return std::exp(log_gamma(s) + log_gamma(t) - log_gamma(s + t));
}

double reflection_residual(double z) {
  if (z == std::floor(z)) throw DomainError("reflection_residual: z must not be an integer");
  const double exact = std::numbers::pi / sin_pi(z);
  return std::abs(gamma(z) * gamma(1.0 - z) - exact) / std::abs(exact);
}

}  // namespace hlog
