#pragma once

// Scalar functions behind the flux bounds:
//   h(x) = x tanh(x/2),  g = h^{-1},  B(x) = (x / g(x))^2,
//   f(x) = 1 / sinh(g(x)/2)^2,  onsager_like(r) = 2 r artanh(r).

#include "fluxbound/common.hpp"

namespace fluxbound {

struct BoundFunctionConfig {
  /// Convergence when |h(y) - x| <= root_tolerance * x.
  double root_tolerance = 1e-12;
  int max_iterations = 200;
  double bracket_growth = 2.0;
};

inline const BoundFunctionConfig& default_bound_config() {
  static const BoundFunctionConfig cfg{};
  return cfg;
}

double h(double x);

/// Inverse of h on [0, inf): guarded Newton inside a bisection bracket.
double g(double x, const BoundFunctionConfig& cfg = default_bound_config());

/// B(0) = 0 by continuity. Always in [0, 1].
double B(double x, const BoundFunctionConfig& cfg = default_bound_config());

/// B extended to +inf, where it tends to 1.
double B(const ExtendedReal& x, const BoundFunctionConfig& cfg = default_bound_config());

/// Diverges at 0; x <= 0 raises DomainError.
double f(double x, const BoundFunctionConfig& cfg = default_bound_config());

/// 2 r artanh(r); |r| = 1 gives +inf, |r| > 1 raises DomainError.
ExtendedReal onsager_like(double r);

}  // namespace fluxbound
