#include <gtest/gtest.h>

#include <cmath>

#include "hlog/errors.hpp"
#include "hlog/sup_search.hpp"
#include "hlog/verification.hpp"

namespace {

using hlog::Attainment;
using hlog::UnitPoint;

TEST(UnitPoint, Consistent) {
  const auto p = UnitPoint::from_x(40.0);
  EXPECT_DOUBLE_EQ(p.complement, std::exp(-40.0));
  EXPECT_EQ(p.r, 1.0);
  const auto q = UnitPoint::from_r(0.5);
  EXPECT_DOUBLE_EQ(q.complement, 0.5);
  EXPECT_NEAR(q.x, std::log(2.0), 1e-15);
}

TEST(SupremumUnit, Parabola) {
  const auto s = hlog::supremum_unit_r([](double r) { return r * (1.0 - r); }, 1e-10);
  EXPECT_NEAR(s.value, 0.25, 1e-12);
  EXPECT_NEAR(s.arg, 0.5, 1e-5);
  EXPECT_EQ(s.boundary, Attainment::Interior);
}

TEST(SupremumUnit, AObjectiveAtZero) {
  hlog::UnitSearchOptions opt;
  opt.value_at_zero = 0.5;
  const auto s = hlog::supremum_unit(
      [](const UnitPoint& p) { return hlog::a_objective(p.r, p.complement, 1e-12); }, 1e-8, opt);
  EXPECT_NEAR(s.value, 0.5, 1e-12);
  EXPECT_EQ(s.arg, 0.0);
  EXPECT_EQ(s.boundary, Attainment::AtZero);
}

TEST(SupremumUnit, HinfObjectiveWithRemovableValue) {
  hlog::UnitSearchOptions opt;
  opt.value_at_zero = 1.0;
  const auto s = hlog::supremum_unit(
      [](const UnitPoint& p) { return hlog::hinf_objective(p.r, p.complement); }, 1e-8, opt);
  EXPECT_NEAR(s.value, 1.0, 1e-12);
  EXPECT_EQ(s.boundary, Attainment::AtZero);
}

TEST(SupremumUnit, IncreasingObjectiveIsBoundaryLimit) {
  const auto s = hlog::supremum_unit([](const UnitPoint& p) { return 2.0 - p.complement; }, 1e-10);
  EXPECT_NEAR(s.value, 2.0, 1e-12);
  EXPECT_EQ(s.boundary, Attainment::AtBoundaryLimit);
}

TEST(SupremumUnit, DivergenceThrows) {
  EXPECT_THROW(hlog::supremum_unit([](const UnitPoint& p) { return 1.0 / p.complement; }, 1e-8),
               hlog::UnboundedError);
  hlog::UnitSearchOptions opt;
  opt.detect_divergence = false;
  EXPECT_NO_THROW(hlog::supremum_unit([](const UnitPoint& p) { return p.x; }, 1e-8, opt));
}

TEST(SupremumUnit, TiesGoToSmallestArgument) {
  const auto s = hlog::supremum_unit_r([](double) { return 3.0; }, 1e-10);
  EXPECT_EQ(s.value, 3.0);
  EXPECT_EQ(s.arg, 0.0);
}

TEST(SupremumUnit, NonFiniteValueThrows) {
  EXPECT_THROW(hlog::supremum_unit_r([](double r) { return r > 0.5 ? std::nan("") : r; }, 1e-8),
               hlog::DomainError);
}

TEST(SupremumUnit, BitIdentical) {
  auto g = [](const UnitPoint& p) { return hlog::b_objective(p.r, p.complement, 1e-11); };
  const auto a = hlog::supremum_unit(g, 1e-8);
  const auto b = hlog::supremum_unit(g, 1e-8);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.arg, b.arg);
  EXPECT_EQ(a.boundary, b.boundary);
}

TEST(SupremumUnit, BObjectiveInteriorMaximum) {
  // mpmath: maximizer x = 6.2464495599..., value 1.0234567490778...
  auto g = [](const UnitPoint& p) { return hlog::b_objective(p.r, p.complement, 1e-11); };
  const auto s = hlog::supremum_unit(g, 1e-9);
  EXPECT_EQ(s.boundary, Attainment::Interior);
  EXPECT_NEAR(s.value, 1.02345674907780298348052681524, 1e-9);
  EXPECT_NEAR(s.arg, 0.998062679720359709608999067731, 1e-6);
}

TEST(SupremumHalfline, Examples) {
  hlog::HalflineSearchOptions h1;
  h1.limit_at_zero = 1.0;
  const auto a = hlog::supremum_halfline(hlog::h1_g, 1e-8, h1);
  EXPECT_NEAR(a.value, 1.0, 1e-8);
  EXPECT_EQ(a.boundary, Attainment::AtZero);

  hlog::HalflineSearchOptions hinf;
  hinf.limit_at_zero = 1.0;
  hinf.limit_at_infinity = 0.5;
  const auto b = hlog::supremum_halfline(hlog::hinf_g, 1e-8, hinf);
  EXPECT_NEAR(b.value, 1.0, 1e-8);
  EXPECT_EQ(b.boundary, Attainment::AtZero);

  const auto c = hlog::supremum_halfline([](double x) { return std::exp(-x); }, 1e-10);
  EXPECT_NEAR(c.value, 1.0, 1e-12);
  EXPECT_EQ(c.arg, 0.0);
}

TEST(SupremumHalfline, InteriorPeak) {
  const auto s = hlog::supremum_halfline([](double x) { return x * std::exp(-x); }, 1e-10);
  EXPECT_NEAR(s.value, std::exp(-1.0), 1e-12);
  EXPECT_NEAR(s.arg, 1.0, 1e-5);
  EXPECT_EQ(s.boundary, Attainment::Interior);
}

TEST(SupremumHalfline, LimitAtInfinityWins) {
  hlog::HalflineSearchOptions opt;
  opt.limit_at_infinity = 1.0;
  const auto s = hlog::supremum_halfline([](double x) { return 1.0 - 1.0 / (1.0 + x); }, 1e-10, opt);
  EXPECT_EQ(s.value, 1.0);
  EXPECT_EQ(s.boundary, Attainment::AtBoundaryLimit);
}

TEST(SupremumHalfline, DivergenceThrows) {
  EXPECT_THROW(hlog::supremum_halfline([](double x) { return x * x; }, 1e-8), hlog::UnboundedError);
}

}  // namespace
