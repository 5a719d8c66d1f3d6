#include "hlog/catalog.hpp"

#include <cmath>
#include <sstream>

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

// |1 - w| < 1 decided from w itself, so that points within rounding
// distance of z = 1 are still accepted.
void require_complement_in_disk(Complex w, const char* op) {
  if (!(2.0 * w.real() > std::norm(w))) {
    std::ostringstream msg;
    msg << op << ": complement " << w << " does not describe a point of the unit disk";
    throw DomainError(msg.str());
  }
}

// f evaluated from the pair (z, w = 1 - z); callers supply whichever of the
// two they know exactly and derive the other.
Complex eval_pair(const TestFunction& fn, Complex z, Complex w) {
  const double a = fn.alpha();
  switch (fn.kind()) {
    case FunctionKind::Constant:
      return 1.0;
    case FunctionKind::HalfLog:
      return 0.5 * (std::log(1.0 + z) - std::log(w));
    case FunctionKind::BlochAlphaExtremal: {
      const Complex one_minus_z2 = w * (1.0 + z);
      return (std::pow(one_minus_z2, 1.0 - a) - 1.0) / (2.0 * (a - 1.0));
    }
    case FunctionKind::HardyAlphaExtremal:
      return std::pow(w, -a);
  }
  return 0.0;
}

Complex derivative_pair(const TestFunction& fn, Complex z, Complex w) {
  const double a = fn.alpha();
  switch (fn.kind()) {
    case FunctionKind::Constant:
      return 0.0;
    case FunctionKind::HalfLog:
      return 1.0 / (w * (1.0 + z));
    case FunctionKind::BlochAlphaExtremal:
      return z * std::pow(w * (1.0 + z), -a);
    case FunctionKind::HardyAlphaExtremal:
      return a * std::pow(w, -a - 1.0);
  }
  return 0.0;
}

}  // namespace

TestFunction TestFunction::constant() { return {FunctionKind::Constant, 0.0}; }

TestFunction TestFunction::half_log() { return {FunctionKind::HalfLog, 0.0}; }

TestFunction TestFunction::bloch_extremal(double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    throw DomainError("bloch_extremal: alpha must be positive and different from 1");
  }
  return {FunctionKind::BlochAlphaExtremal, alpha};
}

TestFunction TestFunction::hardy_extremal(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("hardy_extremal: alpha must lie in (0, 1)");
  }
  return {FunctionKind::HardyAlphaExtremal, alpha};
}

std::string TestFunction::name() const {
  std::ostringstream out;
  switch (kind_) {
    case FunctionKind::Constant:
      return "constant";
    case FunctionKind::HalfLog:
      return "half-log";
    case FunctionKind::BlochAlphaExtremal:
      out << "bloch-extremal(" << alpha_ << ")";
      break;
    case FunctionKind::HardyAlphaExtremal:
      out << "hardy-extremal(" << alpha_ << ")";
      break;
  }
  return out.str();
}

Complex eval(const TestFunction& fn, Complex z) {
  require_in_disk(z, "eval");
  if (fn.kind() == FunctionKind::HalfLog) return std::atanh(z);
  return eval_pair(fn, z, 1.0 - z);
}

Complex eval_at_complement(const TestFunction& fn, Complex w) {
  require_complement_in_disk(w, "eval_at_complement");
  return eval_pair(fn, 1.0 - w, w);
}

Complex eval_derivative(const TestFunction& fn, Complex z) {
  require_in_disk(z, "eval_derivative");
  return derivative_pair(fn, z, 1.0 - z);
}

Complex eval_derivative_at_complement(const TestFunction& fn, Complex w) {
  require_complement_in_disk(w, "eval_derivative_at_complement");
  return derivative_pair(fn, 1.0 - w, w);
}


std::optional<double> boundary_exponent(const TestFunction& fn) {
  switch (fn.kind()) {
    case FunctionKind::Constant:
      return std::nullopt;
    case FunctionKind::HalfLog:
      return 0.0;
    case FunctionKind::BlochAlphaExtremal:
      return 1.0 - fn.alpha();
    case FunctionKind::HardyAlphaExtremal:
      return -fn.alpha();
  }
  return std::nullopt;
}

std::optional<double> coefficient_decay_order(const TestFunction& fn) {
  switch (fn.kind()) {
    case FunctionKind::Constant:
      return std::nullopt;
    case FunctionKind::HalfLog:
      return 1.0;
    case FunctionKind::BlochAlphaExtremal:
      return 2.0 - fn.alpha();
    case FunctionKind::HardyAlphaExtremal:
      return 1.0 - fn.alpha();
  }
  return std::nullopt;
}

bool has_nonnegative_coefficients(const TestFunction& fn) {
  // Bloch: (1-w)^(1-a) has coefficients of sign opposite to (1-a) beyond
  // the constant term, which the 1/(2(a-1)) prefactor turns nonnegative.
  (void)fn;
  return true;
}

CoefficientSeries taylor_coeffs(const TestFunction& fn, std::size_t n) {
  if (n == 0) throw DomainError("taylor_coeffs: need at least one coefficient");
  CoefficientSeries s;
  s.coeffs.assign(n, Complex{0.0, 0.0});
  const double a = fn.alpha();

  switch (fn.kind()) {
    case FunctionKind::Constant:
      s.coeffs[0] = 1.0;
      s.tail_bound = 0.0;
      break;

    case FunctionKind::HalfLog: {
      for (std::size_t k = 1; k < n; k += 2) s.coeffs[k] = 1.0 / static_cast<double>(k);
      const std::size_t next_odd = (n % 2 == 1) ? n : n + 1;
      s.tail_bound = 1.0 / static_cast<double>(next_odd);
      break;
    }

    case FunctionKind::HardyAlphaExtremal: {
      // Binomial series Gamma(k+a) / (Gamma(a) k!), decreasing for a < 1.
      double c = 1.0;
      s.coeffs[0] = c;
      for (std::size_t k = 1; k < n; ++k) {
        c *= (static_cast<double>(k) - 1.0 + a) / static_cast<double>(k);
        s.coeffs[k] = c;
      }
      s.tail_bound = c * (static_cast<double>(n) - 1.0 + a) / static_cast<double>(n);
      break;
    }

    case FunctionKind::BlochAlphaExtremal: {
      // (1-w)^(1-a) = sum_j c_j w^j with c_j = c_{j-1} (j-2+a)/j, w = z^2.
      const double scale = 1.0 / (2.0 * (a - 1.0));
      double c = 1.0;
      std::size_t j = 1;
      for (; 2 * j < n; ++j) {
        c *= (static_cast<double>(j) - 2.0 + a) / static_cast<double>(j);
        s.coeffs[2 * j] = c * scale;
      }
      if (a <= 2.0) {
        // |c_j| is nonincreasing for j >= 1 when a <= 2.
        c *= (static_cast<double>(j) - 2.0 + a) / static_cast<double>(j);
        s.tail_bound = std::abs(c * scale);
      }
      break;
    }
  }
  return s;
}

SeriesValue eval_series(const CoefficientSeries& s, Complex z) {
  require_in_disk(z, "eval_series");
  // Horner in real arithmetic; std::complex multiplication carries inf/nan
  // recovery that costs several times more.
  const double zr = z.real(), zi = z.imag();
  double re = 0.0, im = 0.0;
  for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) {
    const double next_re = re * zr - im * zi + it->real();
    im = re * zi + im * zr + it->imag();
    re = next_re;
  }

  SeriesValue out{{re, im}, std::nullopt};
  if (s.tail_bound) {
    const double r = std::abs(z);
    out.error_bound =
        *s.tail_bound * std::pow(r, static_cast<double>(s.truncation_order())) / (1.0 - r);
  }
  return out;
}

CoefficientSeries derivative_series(const CoefficientSeries& s) {
  CoefficientSeries d;
  if (s.coeffs.size() <= 1) return d;
  d.coeffs.reserve(s.coeffs.size() - 1);
  for (std::size_t k = 1; k < s.coeffs.size(); ++k) {
    d.coeffs.push_back(static_cast<double>(k) * s.coeffs[k]);
  }
  return d;
}

}  // namespace hlog
