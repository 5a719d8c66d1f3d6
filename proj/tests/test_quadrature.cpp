#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hlog/catalog.hpp"
#include "hlog/errors.hpp"
#include "hlog/quadrature.hpp"
#include "hlog/specfun.hpp"

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
using hlog::Abscissa;
using hlog::Complex;

TEST(Integrate, Polynomial) {
  const auto r = hlog::integrate([](double t) { return t; }, 0.0, 1.0, 1e-12);
  EXPECT_NEAR(r.value, 0.5, 1e-15);
  EXPECT_GE(r.error_estimate, 0.0);
  EXPECT_GT(r.evaluations, 0u);
}

TEST(Integrate, InnerIntegralOfTheAConstant) {
  const auto r = hlog::integrate([](double t) { return t / (1.0 - (1.0 - t) * 0.5); }, 0.0, 1.0, 1e-10);
  EXPECT_NEAR(r.value, 2.0 - 2.0 * kLn2, 1e-10);
}

TEST(Integrate, HalfLogHasIntegralLogTwo) {
  auto g = [](const Abscissa& p) { return 0.5 * (std::log1p(p.x) - std::log(p.to_right)); };
  EXPECT_NEAR(hlog::integrate_singular(g, 0.0, 1.0, {std::nullopt, 0.0}, 1e-12).value, kLn2, 1e-12);
  // with the t factor: int_0^1 t/2 log((1+t)/(1-t)) dt = 1/2
  auto tg = [](const Abscissa& p) { return 0.5 * p.x * (std::log1p(p.x) - std::log(p.to_right)); };
  EXPECT_NEAR(hlog::integrate_singular(tg, 0.0, 1.0, {std::nullopt, 0.0}, 1e-12).value, 0.5, 1e-12);
}

TEST(Integrate, ComplexValued) {
  const Complex z{0.3, 0.4};
  const auto r = hlog::integrate([&](double t) { return 1.0 / (1.0 - t * z); }, 0.0, 1.0, 1e-12);
  const Complex exact = -std::log(1.0 - z) / z;
  EXPECT_NEAR(std::abs(r.value - exact), 0.0, 1e-13);
}

TEST(Integrate, ReversedInterval) {
  EXPECT_NEAR(hlog::integrate([](double t) { return t * t; }, 1.0, 0.0).value, -1.0 / 3.0, 1e-14);
}

TEST(Integrate, PanelCapRaisesNonConvergence) {
  auto spiky = [](double t) { return 1.0 / std::sqrt(std::abs(t - 0.3)); };
  try {
    hlog::integrate(spiky, 0.0, 1.0, 1e-14, 8);
    FAIL() << "expected NonConvergenceError";
  } catch (const hlog::NonConvergenceError& e) {
    EXPECT_GT(e.best_value().real(), 0.0);
    EXPECT_GT(e.error_estimate(), 0.0);
  }
}

TEST(Integrate, Deterministic) {
  auto f = [](double t) { return std::sin(40.0 * t) * std::exp(t); };
  const auto a = hlog::integrate(f, 0.0, 3.0, 1e-12);
  const auto b = hlog::integrate(f, 0.0, 3.0, 1e-12);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(IntegrateSingular, Examples) {
  auto inv_sqrt = [](const Abscissa& p) { return 1.0 / std::sqrt(p.to_right); };
  const auto r1 = hlog::integrate_singular(inv_sqrt, 0.0, 1.0, {std::nullopt, -0.5}, 1e-10);
  EXPECT_NEAR(r1.value, 2.0, 1e-10);
  EXPECT_FALSE(r1.singular_flags.first);
  EXPECT_TRUE(r1.singular_flags.second);

  auto arcsine = [](const Abscissa& p) { return 1.0 / std::sqrt(p.from_left * p.to_right); };
  const auto r2 = hlog::integrate_singular(arcsine, 0.0, 1.0, {-0.5, -0.5}, 1e-10);
  EXPECT_NEAR(r2.value, kPi, 1e-10);
  EXPECT_TRUE(r2.singular_flags.first && r2.singular_flags.second);

  auto semicircle = [](const Abscissa& p) { return 1.0 / std::sqrt(p.to_right * (1.0 + p.x)); };
  EXPECT_NEAR(hlog::integrate_singular(semicircle, 0.0, 1.0, {std::nullopt, -0.5}, 1e-10).value, kPi / 2.0,
              1e-10);
}

TEST(IntegrateSingular, PlainDoubleIntegrand) {
  auto f = [](double t) { return std::log(t); };
  EXPECT_NEAR(hlog::integrate_singular(f, 0.0, 1.0, {0.0, std::nullopt}, 1e-12).value, -1.0, 1e-12);
}

TEST(IntegrateSingular, StrongSingularity) {
  // int_0^1 (1-t)^-0.99 dt = 100
  auto f = [](const Abscissa& p) { return std::pow(p.to_right, -0.99); };
  EXPECT_NEAR(hlog::integrate_singular(f, 0.0, 1.0, {std::nullopt, -0.99}, 1e-10).value, 100.0, 1e-7);
}

TEST(IntegrateSingular, NonIntegrableExponentThrows) {
  auto f = [](double t) { return 1.0 / t; };
  EXPECT_THROW(hlog::integrate_singular(f, 0.0, 1.0, {-1.0, std::nullopt}), hlog::DomainError);
  EXPECT_THROW(hlog::integrate_singular(f, 0.0, 1.0, {std::nullopt, -2.0}), hlog::DomainError);
}

TEST(IntegrateSingular, ReflectionIntegrals) {
  for (double a : {0.3, 0.5, 0.7}) {
    auto f = [a](const Abscissa& p) { return std::pow(p.from_left, a - 1.0) * std::pow(p.to_right, -a); };
    const double v = hlog::integrate_singular(f, 0.0, 1.0, {a - 1.0, -a}, 1e-10).value;
    EXPECT_NEAR(v, kPi / std::sin(a * kPi), 1e-8) << "a = " << a;
  }
}

TEST(IntegrateHalfline, Examples) {
  EXPECT_NEAR(hlog::integrate_halfline([](double x) { return std::exp(-x); }, 0.0, 1e-10).value, 1.0, 1e-10);
  EXPECT_NEAR(hlog::integrate_halfline([](double x) { return 1.0 / (x * x); }, 1.0, 1e-10).value, 1.0, 1e-10);
}

TEST(IntegrateHalfline, HBoundAtOneHalf) {
  const double r = 0.5;
  auto f = [r](double x) {
    const double d = 1.0 + r + (1.0 - r) * x;
    return 2.0 * (1.0 - r) * std::log(x) / (d * d);
  };
  const double v = hlog::integrate_halfline(f, 1.0, 1e-8).value;
  // Without the factor (x-1)/(x+1) the bound (4/3) log 4 is attained.
  EXPECT_LE(v, 2.0 / (1.0 + r) * std::log(2.0 / (1.0 - r)) + 1e-8);
  EXPECT_NEAR(v, 1.84839248149318749177928565722, 1e-8);
}

TEST(CircleMean, Examples) {
  EXPECT_NEAR(hlog::circle_mean([](Complex) { return Complex{1.0, 0.0}; }, 0.5, 1.0), 1.0, 1e-14);
  EXPECT_NEAR(hlog::circle_mean([](Complex z) { return z; }, 0.7, hlog::kInfinity), 0.7, 1e-14);
  // M_2(r, z) = r
  EXPECT_NEAR(hlog::circle_mean([](Complex z) { return z; }, 0.7, 2.0), 0.7, 1e-12);
}

TEST(CircleMean, HardyExtremalInsideBand) {
  // c = -1/2 band: 1 <= M_1(0.9, (1-z)^-1/2) <= Gamma(1/2) / Gamma(3/4)^2
  const double m = hlog::circle_mean([](Complex z) { return std::pow(1.0 - z, -0.5); }, 0.9, 1.0, 1e-10);
  EXPECT_NEAR(m, 1.084507731577308219278140431, 1e-9);
  EXPECT_GE(m, 1.0);
  EXPECT_LE(m, hlog::gamma(0.5) / std::pow(hlog::gamma(0.75), 2));
}

TEST(CircleMean, PeakedModulusFallsBackToAdaptive) {
  const double s = 1e-6;
  auto modulus = [s](double theta) {
    const double h = std::sin(0.5 * theta);
    return std::pow(s * s + 4.0 * (1.0 - s) * h * h, -0.25);
  };
  // equals i_c(-1/2, 1 - s), which lies in [1, Gamma(1/2)/Gamma(3/4)^2]
  const double m = hlog::circle_mean_of_modulus(modulus, 1.0, 1e-9);
  EXPECT_GE(m, 1.0);
  EXPECT_LE(m, hlog::gamma(0.5) / std::pow(hlog::gamma(0.75), 2));
  EXPECT_NEAR(m, 1.1803, 1e-3);
}

}  // namespace
