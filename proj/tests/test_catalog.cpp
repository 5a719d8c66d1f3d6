#include <gtest/gtest.h>

#include <cmath>

#include "hlog/catalog.hpp"
#include "hlog/errors.hpp"
#include "hlog/sampling.hpp"

namespace {

using hlog::Complex;
using hlog::TestFunction;

void expect_close(Complex a, Complex b, double tol) {
  EXPECT_NEAR(a.real(), b.real(), tol);
  EXPECT_NEAR(a.imag(), b.imag(), tol);
}

TEST(Eval, ClosedForms) {
  expect_close(hlog::eval(TestFunction::constant(), {0.3, 0.1}), 1.0, 0.0);
  expect_close(hlog::eval(TestFunction::half_log(), 0.0), 0.0, 0.0);
  expect_close(hlog::eval(TestFunction::hardy_extremal(0.5), 0.0), 1.0, 1e-15);
  expect_close(hlog::eval(TestFunction::bloch_extremal(1.5), 0.0), 0.0, 1e-15);
  expect_close(hlog::eval(TestFunction::half_log(), 0.5), 0.5 * std::log(3.0), 1e-15);
  expect_close(hlog::eval(TestFunction::hardy_extremal(0.5), {0.0, 0.5}),
               std::pow(Complex{1.0, -0.5}, -0.5), 1e-15);
}

TEST(Eval, DomainErrors) {
  EXPECT_THROW(hlog::eval(TestFunction::constant(), 1.0), hlog::DomainError);
  EXPECT_THROW(hlog::eval(TestFunction::half_log(), {0.8, 0.7}), hlog::DomainError);
  EXPECT_THROW(TestFunction::bloch_extremal(1.0), hlog::DomainError);
  EXPECT_THROW(TestFunction::bloch_extremal(-0.5), hlog::DomainError);
  EXPECT_THROW(TestFunction::hardy_extremal(1.0), hlog::DomainError);
  EXPECT_THROW(TestFunction::hardy_extremal(0.0), hlog::DomainError);
}

TEST(Eval, ComplementFormMatchesNearBoundary) {
  const Complex w{1e-9, 2e-9};
  const Complex z = 1.0 - w;
  for (const auto& fn : {TestFunction::half_log(), TestFunction::hardy_extremal(0.3),
                         TestFunction::bloch_extremal(1.5)}) {
    const Complex a = hlog::eval_at_complement(fn, w);
    const Complex b = hlog::eval(fn, z);
    EXPECT_LT(std::abs(a - b), 1e-6 * std::abs(a)) << fn.name();
  }
}

TEST(Eval, DerivativeMatchesDifferenceQuotient) {
  const Complex z{0.3, -0.4};
  const double h = 1e-6;
  for (const auto& fn : {TestFunction::constant(), TestFunction::half_log(),
                         TestFunction::hardy_extremal(0.7), TestFunction::bloch_extremal(0.5),
                         TestFunction::bloch_extremal(1.5)}) {
    const Complex fd = (hlog::eval(fn, z + h) - hlog::eval(fn, z - h)) / (2.0 * h);
    expect_close(hlog::eval_derivative(fn, z), fd, 1e-8);
    expect_close(hlog::eval_derivative_at_complement(fn, 1.0 - z), hlog::eval_derivative(fn, z), 1e-12);
  }
}

TEST(TaylorCoeffs, Examples) {
  const auto g = hlog::taylor_coeffs(TestFunction::half_log(), 4);
  ASSERT_EQ(g.truncation_order(), 4u);
  expect_close(g.coeffs[0], 0.0, 0.0);
  expect_close(g.coeffs[1], 1.0, 1e-16);
  expect_close(g.coeffs[2], 0.0, 0.0);
  expect_close(g.coeffs[3], 1.0 / 3.0, 1e-16);

  const auto one = hlog::taylor_coeffs(TestFunction::constant(), 3);
  ASSERT_EQ(one.truncation_order(), 3u);
  expect_close(one.coeffs[0], 1.0, 0.0);
  expect_close(one.coeffs[1], 0.0, 0.0);
  expect_close(one.coeffs[2], 0.0, 0.0);

  const auto f = hlog::taylor_coeffs(TestFunction::hardy_extremal(0.5), 3);
  expect_close(f.coeffs[0], 1.0, 1e-16);
  expect_close(f.coeffs[1], 0.5, 1e-16);
  expect_close(f.coeffs[2], 0.375, 1e-16);
}

TEST(TaylorCoeffs, TailBoundCertifiesNextCoefficients) {
  for (const auto& fn : {TestFunction::half_log(), TestFunction::hardy_extremal(0.4),
                         TestFunction::bloch_extremal(1.5), TestFunction::bloch_extremal(0.5)}) {
    const auto head = hlog::taylor_coeffs(fn, 64);
    const auto longer = hlog::taylor_coeffs(fn, 512);
    ASSERT_TRUE(head.tail_bound.has_value()) << fn.name();
    for (std::size_t k = 64; k < 512; ++k) {
      EXPECT_LE(std::abs(longer.coeffs[k]), *head.tail_bound * (1.0 + 1e-12)) << fn.name() << " k=" << k;
    }
  }
}

TEST(TaylorCoeffs, ZeroOrderThrows) {
  EXPECT_THROW(hlog::taylor_coeffs(TestFunction::constant(), 0), hlog::DomainError);
}

TEST(EvalSeries, Examples) {
  hlog::CoefficientSeries geo{{1.0, 1.0, 1.0}, std::nullopt};
  expect_close(hlog::eval_series(geo, 0.5).value, 1.75, 1e-16);
  hlog::CoefficientSeries id{{0.0, 1.0}, std::nullopt};
  expect_close(hlog::eval_series(id, {0.0, 0.3}).value, Complex{0.0, 0.3}, 1e-16);
  EXPECT_THROW(hlog::eval_series(geo, 1.0), hlog::DomainError);
}

TEST(EvalSeries, HalfLogWithinTailBound) {
  const auto s = hlog::taylor_coeffs(TestFunction::half_log(), 64);
  const auto v = hlog::eval_series(s, 0.5);
  const double exact = 0.5 * std::log(3.0);
  EXPECT_NEAR(v.value.real(), exact, 1e-12);
  ASSERT_TRUE(v.error_bound.has_value());
  EXPECT_LE(std::abs(v.value.real() - exact), *v.error_bound);
}

TEST(EvalSeries, ConvergesWithinBoundAtPointNine) {
  for (const auto& fn : {TestFunction::half_log(), TestFunction::hardy_extremal(0.5)}) {
    const auto v = hlog::eval_series(hlog::taylor_coeffs(fn), 0.9);
    const Complex exact = hlog::eval(fn, 0.9);
    EXPECT_LE(std::abs(v.value - exact), *v.error_bound + 1e-13) << fn.name();
    EXPECT_LT(std::abs(v.value - exact), 1e-12) << fn.name();
  }
}

TEST(DerivativeSeries, Examples) {
  EXPECT_TRUE(hlog::derivative_series({{3.0}, std::nullopt}).coeffs.empty());
  const auto d = hlog::derivative_series({{0.0, 1.0, 0.0, 1.0 / 3.0}, std::nullopt});
  ASSERT_EQ(d.coeffs.size(), 3u);
  expect_close(d.coeffs[0], 1.0, 0.0);
  expect_close(d.coeffs[1], 0.0, 0.0);
  expect_close(d.coeffs[2], 1.0, 1e-16);
  const auto e = hlog::derivative_series({{1.0, 2.0, 3.0}, std::nullopt});
  ASSERT_EQ(e.coeffs.size(), 2u);
  expect_close(e.coeffs[0], 2.0, 0.0);
  expect_close(e.coeffs[1], 6.0, 0.0);
}

TEST(Metadata, ExponentsAndPositivity) {
  EXPECT_FALSE(hlog::boundary_exponent(TestFunction::constant()).has_value());
  EXPECT_EQ(hlog::boundary_exponent(TestFunction::half_log()).value(), 0.0);
  EXPECT_EQ(hlog::boundary_exponent(TestFunction::hardy_extremal(0.3)).value(), -0.3);
  EXPECT_TRUE(hlog::has_nonnegative_coefficients(TestFunction::constant()));
  EXPECT_TRUE(hlog::has_nonnegative_coefficients(TestFunction::half_log()));
  EXPECT_TRUE(hlog::has_nonnegative_coefficients(TestFunction::hardy_extremal(0.5)));
}

TEST(Sampling, ReproducibleAndInRange) {
  hlog::UniformSource a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  hlog::UniformSource src(11);
  for (int i = 0; i < 50; ++i) {
    const auto p = hlog::random_polynomial(src, 64);
    EXPECT_GE(p.coeffs.size(), 1u);
    EXPECT_LE(p.coeffs.size(), 65u);
    EXPECT_EQ(p.tail_bound.value(), 0.0);
    for (const auto& c : p.coeffs) {
      EXPECT_LE(std::abs(c.real()), 1.0);
      EXPECT_LE(std::abs(c.imag()), 1.0);
    }
  }
}

}  // namespace
