#include "hlog/hilbert_operator.hpp"

#include <cmath>
#include <sstream>

#include "compensated.hpp"
#include "hlog/errors.hpp"

namespace hlog {
namespace {

void require_in_disk(Complex z, const char* op) {
  if (!(std::abs(z) < 1.0)) {
    std::ostringstream msg;
    msg << op << ": point " << z << " is not inside the unit disk";
    throw DomainError(msg.str());
  }
}

// Right-endpoint declaration for int_0^1 ... f(t) dt, rejecting
// non-integrable boundary behaviour.
SingularitySpec endpoint_spec(const TestFunction& fn, const char* op) {
  const auto e = boundary_exponent(fn);
  if (e && *e <= -1.0) {
    std::ostringstream msg;
    msg << op << ": " << fn.name() << " is not integrable on [0, 1)";
    throw DomainError(msg.str());
  }
  return {std::nullopt, e};
}

template <class F>
auto integrate_on_unit(const TestFunction& fn, F&& integrand, double tol, const char* op) {
  const SingularitySpec spec = endpoint_spec(fn, op);
  if (!spec.right_exponent) {
    auto plain = [&](double t) { return integrand(Abscissa{t, t, 1.0 - t}); };
    return integrate(plain, 0.0, 1.0, tol).value;
  }
  return integrate_singular(integrand, 0.0, 1.0, spec, tol).value;
}

}  // namespace

CompositionSymbol::CompositionSymbol(double t) : t_(t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("CompositionSymbol: t must lie in (0, 1)");
}

Complex CompositionSymbol::weight(Complex z) const { return 1.0 / (1.0 - (1.0 - t_) * z); }

Complex CompositionSymbol::map(Complex z) const { return t_ * weight(z); }

Complex CompositionSymbol::map_complement(Complex z) const {
  return (1.0 - t_) * (1.0 - z) * weight(z);
}

CoefficientSeries apply_matrix(const CoefficientSeries& s, std::size_t out_order) {
  if (out_order == 0) throw DomainError("apply_matrix: out_order must be at least 1");
  CoefficientSeries out;
  out.coeffs.resize(out_order);
  const std::size_t n_in = s.coeffs.size();
  for (std::size_t n = 0; n < out_order; ++n) {
    detail::CompensatedSum sum;
    for (std::size_t k = 0; k < n_in; ++k) {
      sum.add(s.coeffs[k] / static_cast<double>(n + k + 1));
    }
    out.coeffs[n] = sum.result<Complex>();
  }
  if (s.tail_bound && *s.tail_bound == 0.0) {
    detail::CompensatedSum mass;
    for (const auto& a : s.coeffs) mass.add(std::abs(a));
    out.tail_bound = mass.result<double>() / static_cast<double>(out_order + 1);
  }
  return out;
}

CoefficientSeries apply_matrix_extrapolated(const TestFunction& fn, std::size_t out_order,
                                            std::size_t base_order) {
  if (base_order == 0) throw DomainError("apply_matrix_extrapolated: base_order must be positive");
  const auto order = coefficient_decay_order(fn);
  if (!order) return apply_matrix(taylor_coeffs(fn, base_order), out_order);
  if (!(*order > 0.0)) {
    std::ostringstream msg;
    msg << "apply_matrix_extrapolated: the Hilbert series of " << fn.name() << " diverges";
    throw DomainError(msg.str());
  }

  const auto b1 = apply_matrix(taylor_coeffs(fn, base_order), out_order).coeffs;
  const auto b2 = apply_matrix(taylor_coeffs(fn, 2 * base_order), out_order).coeffs;
  const auto b4 = apply_matrix(taylor_coeffs(fn, 4 * base_order), out_order).coeffs;

  const double f1 = std::pow(2.0, *order);
  const double f2 = std::pow(2.0, *order + 1.0);
  CoefficientSeries out;
  out.coeffs.resize(out_order);
  for (std::size_t n = 0; n < out_order; ++n) {
    const Complex r1 = (f1 * b2[n] - b1[n]) / (f1 - 1.0);
    const Complex r2 = (f1 * b4[n] - b2[n]) / (f1 - 1.0);
    out.coeffs[n] = (f2 * r2 - r1) / (f2 - 1.0);
  }
  return out;
}

Complex apply_integral(const TestFunction& fn, Complex z, double tol) {
  require_in_disk(z, "apply_integral");
  const Complex w = 1.0 - z;
  auto integrand = [&](const Abscissa& p) -> Complex {
    return eval_at_complement(fn, p.to_right) / (w + p.to_right * z);
  };
  return integrate_on_unit(fn, integrand, tol, "apply_integral");
}

Complex derivative_at(const TestFunction& fn, Complex z, double tol) {
  require_in_disk(z, "derivative_at");
  const Complex w = 1.0 - z;
  auto integrand = [&](const Abscissa& p) -> Complex {
    const Complex kernel = 1.0 / (w + p.to_right * z);
    return p.x * eval_at_complement(fn, p.to_right) * kernel * kernel;
  };
  return integrate_on_unit(fn, integrand, tol, "derivative_at");
}

Complex derivative_at_pathshifted(const TestFunction& fn, Complex z, double tol) {
  require_in_disk(z, "derivative_at_pathshifted");
  const Complex w = 1.0 - z;
  auto integrand = [&](const Abscissa& p) -> Complex {
    const Complex denom = 1.0 - p.to_right * z;
    const Complex phi_complement = p.to_right * w / denom;
    return p.x * eval_at_complement(fn, phi_complement) / (denom * w);
  };
  return integrate_on_unit(fn, integrand, tol, "derivative_at_pathshifted");
}

double derivative_at_pathshifted(const TestFunction& fn, double r, double complement, double tol) {
  if (!(r >= 0.0 && complement > 0.0 && complement <= 1.0)) {
    throw DomainError("derivative_at_pathshifted: need 0 <= r < 1 with complement 1 - r > 0");
  }
  auto integrand = [&](const Abscissa& p) -> double {
    const double denom = complement + p.x * r;
    const double phi_complement = p.to_right * complement / denom;
    return p.x * eval_at_complement(fn, phi_complement).real() / (denom * complement);
  };
  return integrate_on_unit(fn, integrand, tol, "derivative_at_pathshifted");
}

Complex apply_T(const TestFunction& fn, double t, Complex z) {
  require_in_disk(z, "apply_T");
  const CompositionSymbol symbol(t);
  return symbol.weight(z) * eval_at_complement(fn, symbol.map_complement(z));
}

Complex composition_integral(const TestFunction& fn, Complex z, double tol) {
  return composition_integral(fn, z, 1.0 - z, tol);
}

Complex composition_integral(const TestFunction& fn, Complex z, Complex w, double tol) {
  require_in_disk(z, "composition_integral");
  auto integrand = [&](const Abscissa& p) -> Complex {
    const Complex denom = 1.0 - p.to_right * z;
    return eval_at_complement(fn, p.to_right * w / denom) / denom;
  };
  return integrate_on_unit(fn, integrand, tol, "composition_integral");
}

}  // namespace hlog
