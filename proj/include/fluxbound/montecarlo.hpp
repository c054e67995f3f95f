#pragma once

// Random-qubit experiment: rho diagonal, sigma with coherence, and a random
// qubit observable, evaluated against every flux bound. Also the tabular
// runners behind the spinpair and saturation subcommands.

#include <cstdint>
#include <vector>

#include "fluxbound/flux_bounds.hpp"
#include "fluxbound/random.hpp"
#include "fluxbound/table.hpp"
#include "fluxbound/thermo.hpp"

namespace fluxbound {

/// The seven scalars behind one (theta, rho, sigma) triple.
struct QubitDraw {
  double p1 = 0.5;       // rho = (1 - p1)|0><0| + p1 |1><1|
  double q1 = 0.5;       // sigma populations
  double c_sq = 0.125;   // |C|^2 in [0, q1 (1 - q1)]
  double c_phase = 0.0;  // arg C in [0, 2 pi)
  double omega = 2.0;    // theta = omega (|1><1| - |0><0|) + D|0><1| + h.c.
  double d_sq = 0.5;     // |D|^2 in [0, 1]
  double d_phase = 0.0;  // arg D in [0, 2 pi)
};

struct QubitTriple {
  Observable theta;
  DensityMatrix rho;
  DensityMatrix sigma;
};

/// Consumes exactly seven uniforms, in field order.
QubitDraw sample_qubit_draw(RandomStream& rng);

QubitTriple build_qubit_triple(const QubitDraw& d, const Tolerances& tol = default_tolerances());

QubitTriple sample_qubit_triple(RandomStream& rng, const Tolerances& tol = default_tolerances());

enum class RejectionPolicy { redraw, report_infinite };

RejectionPolicy parse_rejection_policy(const std::string& name);

/// Stream id of the Monte Carlo draws; other suites use other ids.
inline constexpr std::uint64_t kQubitDrawStream = 1;

struct DrawConfig {
  std::int64_t n_draws = 10000;
  std::uint64_t master_seed = 42;
  RejectionPolicy rejection_policy = RejectionPolicy::report_infinite;
  unsigned threads = 1;
  Tolerances tolerances{};
  int max_redraws = 1000;

  void validate() const;
};

struct DrawRecord {
  std::int64_t draw = 0;
  double flux_ratio_sq = 0.0;
  ExtendedReal s_tilde;
  ExtendedReal pinsker_rhs;
  double main_rhs = 0.0;
  double strengthened_rhs = 0.0;
  double epsilon = 0.0;
  double main_slack = 0.0;
  std::int64_t redraws = 0;
  bool main_holds = true;
  bool strengthened_holds = true;
  bool all_hold = true;
};

struct MonteCarloSummary {
  std::int64_t draws = 0;
  std::int64_t main_violations = 0;
  std::int64_t strengthened_violations = 0;
  std::int64_t any_violations = 0;
  std::int64_t infinite_s_tilde = 0;
  std::int64_t total_redraws = 0;
  /// s_tilde >= 2, where the quadratic bound s_tilde/2 is already >= 1.
  std::int64_t far_from_equilibrium = 0;
  /// ... and where the main bound nevertheless stays below 1.
  std::int64_t far_and_nontrivial = 0;
  double min_main_slack = 0.0;
};

struct MonteCarloResult {
  std::vector<DrawRecord> records;  // ordered by draw index
  MonteCarloSummary summary;
};

DrawRecord evaluate_draw(std::int64_t index, const DrawConfig& cfg);

MonteCarloResult run_montecarlo(const DrawConfig& cfg);

/// draw,flux_ratio_sq,s_tilde,pinsker_rhs,main_rhs,strengthened_rhs,epsilon,redraws
Table montecarlo_table(const MonteCarloResult& result);

/// t,flux,flux_analytic,two_phi_sq,onsager,s_tilde
Table spinpair_table(const std::vector<SpinPairPoint>& points);

struct SaturationRow {
  double a = 0.0;
  double tn_sq_over_4 = 0.0;  // ||rho - sigma||_1^2 / 4, numerical
  double b_of_s_tilde = 0.0;  // B(S~), numerical
  double abs_diff = 0.0;
};

/// Both columns from the eigensolver and the root finder, not closed forms.
std::vector<SaturationRow> run_saturation(const std::vector<double>& a_grid,
                                          const Tolerances& tol = default_tolerances());

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps);

/// a,tn_sq_over_4,B_of_s_tilde,abs_diff
Table saturation_table(const std::vector<SaturationRow>& rows);

}  // namespace fluxbound
