#pragma once

// Gamma and digamma for positive real arguments.

namespace woct {

/// Lanczos approximation (g = 7, 9 terms). Throws domain-error for x <= 0.
double gamma_fn(double x);

/// ln Gamma(x) for x > 0.
double lgamma_fn(double x);

/// Recurrence up to x >= 10, then the asymptotic series. Throws domain-error for x <= 0.
double digamma_fn(double x);

}  // namespace woct
