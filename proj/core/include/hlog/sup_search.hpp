#pragma once

// One-dimensional suprema over [0, 1) and [0, inf). The unit interval is
// searched in x = -log(1 - r), so the grid reaches within e^-40 of the
// boundary, and every objective sees r together with its exact complement.

#include <cstddef>
#include <functional>
#include <optional>

namespace hlog {

enum class Attainment { Interior, AtZero, AtBoundaryLimit };

const char* to_string(Attainment a) noexcept;

struct SupResult {
  double value = 0.0;
  /// Maximizer in the caller's coordinate (r or x). For AtBoundaryLimit the
  /// last grid point.
  double arg = 0.0;
  Attainment boundary = Attainment::Interior;
  double error_estimate = 0.0;
};

/// A search point in [0, 1): r, complement = 1 - r and x = -log(1 - r),
/// all three consistent to rounding. Near the boundary r rounds to 1 while
/// the complement stays exact.
struct UnitPoint {
  double r;
  double complement;
  double x;

  static UnitPoint from_x(double x);
  static UnitPoint from_r(double r);
};

struct UnitSearchOptions {
  double x_max = 40.0;
  std::size_t grid_points = 512;
  /// Objective value at r = 0 when g has a removable singularity there.
  std::optional<double> value_at_zero;
  /// Throw UnboundedError when the tail grows by more than 10x over the
  /// final decade of 1 - r.
  bool detect_divergence = true;
};

struct HalflineSearchOptions {
  std::optional<double> limit_at_zero;
  std::optional<double> limit_at_infinity;
  bool detect_divergence = true;
};

/// Largest x for which r = 1 - e^-x is still distinguishable from 1.
inline constexpr double kRadialResolutionLimit = 36.0;

/// sup over [0, 1) of an objective that sees the full UnitPoint. Evaluates a
/// uniform x-grid, refines the three best local maxima by golden section
/// until the bracket width squared is below tol, and classifies attainment.
/// Ties within tol go to the smallest argument. `arg` is reported as r.
/// Throws DomainError for a non-finite grid value and UnboundedError on
/// divergence.
SupResult supremum_unit(const std::function<double(const UnitPoint&)>& g, double tol,
                        const UnitSearchOptions& options = {});

/// Same for an objective of r alone. The grid is cut at
/// kRadialResolutionLimit because r cannot resolve deeper points.
SupResult supremum_unit_r(const std::function<double(double)>& g, double tol,
                          UnitSearchOptions options = {});

/// sup over [0, inf): 384 uniform points on [0, 10] and 128 log-spaced
/// points on (10, 60], golden refinement, and comparison with the supplied
/// end limits. `arg` is reported as x.
SupResult supremum_halfline(const std::function<double(double)>& g, double tol,
                            const HalflineSearchOptions& options = {});

}  // namespace hlog
