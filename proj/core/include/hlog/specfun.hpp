#pragma once

namespace hlog {

/// The logarithmic weight log(e / (1-r)^2) = 1 - 2 log(1-r) on [0, 1).
/// Equals 1 at r = 0 and increases strictly. Throws DomainError outside [0, 1).
double log_weight(double r);

/// Same weight from the complement s = 1 - r, for points so close to the
/// boundary that r itself rounds to 1. Requires 0 < s <= 1.
double log_weight_from_complement(double s);

/// Gamma function for real x off the nonpositive integers. Lanczos (g = 7,
/// nine terms) for x >= 1/2 and the reflection formula below that.
/// Throws PoleError at 0, -1, -2, ...
double gamma(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// B(s, t) = Gamma(s) Gamma(t) / Gamma(s + t) evaluated through log-Gamma.
/// Symmetric in its arguments bit for bit. Requires s > 0 and t > 0.
double beta(double s, double t);

/// |Gamma(z) Gamma(1-z) - pi / sin(pi z)| relative to pi / |sin(pi z)|.
/// Throws DomainError at integers.
double reflection_residual(double z);

}  // namespace hlog
