#include "fluxbound/bound_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace fluxbound {

namespace {

void require_nonnegative(double x, const char* name) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(name) + " requires a finite x >= 0, got " + std::to_string(x), x);
  }
}

double h_prime(double y) {
  const double c = std::cosh(0.5 * y);
  return std::tanh(0.5 * y) + 0.5 * y / (c * c);
}

}  // namespace

double h(double x) {
  require_nonnegative(x, "h");
  return x * std::tanh(0.5 * x);
}

double g(double x, const BoundFunctionConfig& cfg) {
  require_nonnegative(x, "g");
  if (x == 0.0) return 0.0;

  // h(y) <= y, so g(x) >= x.
  double lo = x;
  double hi = std::max(x + 2.0, std::sqrt(2.0 * x) + 2.0);
  int grow = 0;
  while (h(hi) < x) {
    lo = hi;
    hi *= cfg.bracket_growth;
    if (++grow > cfg.max_iterations) throw NumericError("g: bracket growth failed");
  }

  const double target = cfg.root_tolerance * x;
  double y = 0.5 * (lo + hi);
  for (int it = 0; it < cfg.max_iterations; ++it) {
    const double r = h(y) - x;
    if (std::abs(r) <= target) {
      // One polishing step; the acceptance test alone leaves up to
      // root_tolerance relative error, visible in B once tanh(y/2) rounds to 1.
      const double polished = y - r / h_prime(y);
      return std::abs(h(polished) - x) <= std::abs(r) ? polished : y;
    }
    if (r > 0.0) hi = y; else lo = y;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) return y;

    const double d = h_prime(y);
    double next = d > 0.0 ? y - r / d : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    y = next;
  }
  throw NumericError("g: no convergence within " + std::to_string(cfg.max_iterations) +
                     " iterations at x = " + std::to_string(x));
}

double B(double x, const BoundFunctionConfig& cfg) {
  require_nonnegative(x, "B");
  if (x == 0.0) return 0.0;
  const double ratio = x / g(x, cfg);
  return ratio * ratio;
}

double B(const ExtendedReal& x, const BoundFunctionConfig& cfg) {
  return x.finite() ? B(x.value(), cfg) : 1.0;
}

double f(double x, const BoundFunctionConfig& cfg) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("f requires a finite x > 0, got " + std::to_string(x), x);
  }
  const double s = std::sinh(0.5 * g(x, cfg));
  return 1.0 / (s * s);
}

ExtendedReal onsager_like(double r) {
  if (!(std::abs(r) <= 1.0)) {
    throw DomainError("onsager_like requires |r| <= 1, got " + std::to_string(r), r);
  }
  if (std::abs(r) == 1.0) return ExtendedReal::infinity();
  return ExtendedReal(2.0 * r * std::atanh(r));
}

}  // namespace fluxbound
