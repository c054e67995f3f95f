#include <doctest.h>

#include <cmath>
#include <vector>

#include "fluxbound/bound_functions.hpp"
#include "oracles.hpp"

using namespace fluxbound;

namespace {

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

}  // namespace

TEST_CASE("h and g") {
  CHECK(h(2.0) == doctest::Approx(1.523188).epsilon(1e-6));
  CHECK(h(0.0) == 0.0);
  CHECK(g(0.0) == 0.0);
  CHECK(std::abs(g(h(2.0)) - 2.0) <= 1e-10);
  CHECK(std::abs(g(1e-8) / std::sqrt(2e-8) - 1.0) <= 1e-3);
  CHECK_THROWS_AS(g(-1.0), DomainError);
  CHECK_THROWS_AS(g(std::nan("")), DomainError);

  for (double x : log_grid(1e-6, 50.0, 400)) {
    const double y = g(x);
    CHECK(std::abs(h(y) - x) <= 1e-10);
    CHECK(std::abs(y - oracle::g_bisection(x)) <= 1e-9 * std::max(1.0, y));
  }
}

TEST_CASE("g honours its configuration") {
  BoundFunctionConfig cfg;
  cfg.max_iterations = 1;
  cfg.root_tolerance = 1e-300;
  CHECK_THROWS_AS(g(7.3, cfg), NumericError);
}

TEST_CASE("B") {
  CHECK(B(0.0) == 0.0);
  CHECK(B(h(2.0)) == doctest::Approx(std::pow(std::tanh(1.0), 2)).epsilon(1e-12));
  CHECK(B(h(2.0)) == doctest::Approx(0.580026).epsilon(1e-6));
  CHECK(B(ExtendedReal::infinity()) == 1.0);
  CHECK(B(ExtendedReal(h(2.0))) == B(h(2.0)));
  CHECK(std::abs(B(1e-8) / 0.5e-8 - 1.0) <= 1e-3);
  CHECK_THROWS_AS(B(-0.5), DomainError);

  double prev = -1.0;
  for (double x : log_grid(1e-6, 50.0, 400)) {
    const double b = B(x);
    CHECK(b <= 1.0);
    CHECK(b <= std::min(1.0, 0.5 * x) + 1e-15);
    // Strict while the increments dominate the root-finder tolerance; once
    // B is within round-off of 1 only non-decrease up to that tolerance.
    if (b < 1.0 - 1e-9) CHECK(b > prev); else CHECK(b >= prev - 1e-12);
    prev = b;
  }
}

TEST_CASE("f") {
  CHECK(f(h(2.0)) == doctest::Approx(1.0 / std::pow(std::sinh(1.0), 2)).epsilon(1e-12));
  CHECK(f(h(2.0)) == doctest::Approx(0.7240616).epsilon(1e-7));
  CHECK_THROWS_AS(f(0.0), DomainError);
  CHECK_THROWS_AS(f(-1.0), DomainError);

  double prev = INFINITY;
  for (double x : log_grid(1e-4, 50.0, 400)) {
    const double fx = f(x);
    CHECK(std::abs(B(x) * (1.0 + fx) - 1.0) <= 1e-10);
    CHECK(fx < prev);
    prev = fx;
  }
}

TEST_CASE("onsager_like") {
  CHECK(onsager_like(0.8).value() == doctest::Approx(1.6 * std::atanh(0.8)).epsilon(1e-14));
  // artanh(0.8) = ln 3
  CHECK(onsager_like(0.8).value() == doctest::Approx(1.6 * std::log(3.0)).epsilon(1e-14));
  CHECK(onsager_like(0.0).value() == 0.0);
  CHECK(onsager_like(-0.5) == onsager_like(0.5));
  CHECK_FALSE(onsager_like(1.0).finite());
  CHECK_FALSE(onsager_like(-1.0).finite());
  CHECK_THROWS_AS(onsager_like(1.5), DomainError);
}

TEST_CASE("r^2 <= B(s) iff 2 r artanh r <= s") {
  int checked = 0;
  for (int i = 1; i < 100; ++i) {
    const double r = i / 100.0;
    const double boundary = onsager_like(r).value();
    for (double s : log_grid(1e-3, 20.0, 120)) {
      // stay away from the boundary, where either side is decided by round-off
      if (std::abs(s - boundary) <= 1e-9 * std::max(1.0, s)) continue;
      const bool lhs = r * r <= B(s);
      const bool rhs = boundary <= s;
      CHECK(lhs == rhs);
      ++checked;
    }
  }
  CHECK(checked > 10000);
}
