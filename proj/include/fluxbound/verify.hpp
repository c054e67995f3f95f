#pragma once

// Seeded property suites for every inequality and identity the library
// implements. A suite records its minimum slack and the first offending
// (seed, draw) when it fails.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fluxbound/montecarlo.hpp"

namespace fluxbound {

struct VerifyConfig {
  std::uint64_t master_seed = 42;
  std::int64_t qubit_draws = 1000;     // Monte Carlo triples and random qubit pairs
  std::int64_t higher_dim_draws = 100; // per dimension, for dims 3 and 4
  std::int64_t scenario_draws = 100;   // random 2 x 2 scenarios
  std::int64_t observable_draws = 100; // optimal-shift suite, dims 2..4
  std::size_t shift_grid_points = 10000;
  Tolerances tolerances{};
  /// Right-hand side of the main bound as a function of S~. Replaceable so the
  /// harness can be checked against a deliberately broken bound.
  std::function<double(const ExtendedReal&)> main_bound = [](const ExtendedReal& s) {
    return B(s);
  };
};

struct Violation {
  std::uint64_t seed = 0;
  std::int64_t draw = 0;
  double slack = 0.0;
};

struct SuiteResult {
  std::string name;
  std::int64_t checks = 0;
  std::int64_t violations = 0;
  double min_slack = 0.0;
  std::optional<Violation> first_violation;

  void record(double slack, double tolerance, std::uint64_t seed, std::int64_t draw);
};

struct VerifyReport {
  std::uint64_t master_seed = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
  const SuiteResult& suite(const std::string& name) const;
  /// One JSON object: {"seed":..., "passed":..., "suites":[...]}.
  std::string to_json() const;
  /// name,checks,violations,min_slack,first_violation_draw
  Table to_table() const;
};

VerifyReport run_verify(const VerifyConfig& cfg);

}  // namespace fluxbound
