#include "fluxbound/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

namespace fluxbound {

QubitDraw sample_qubit_draw(RandomStream& rng) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  QubitDraw d;
  d.p1 = rng.uniform();
  d.q1 = rng.uniform();
  d.c_sq = rng.uniform(0.0, d.q1 * (1.0 - d.q1));
  d.c_phase = rng.uniform(0.0, two_pi);
  d.omega = rng.uniform(0.0, 4.0);
  d.d_sq = rng.uniform();
  d.d_phase = rng.uniform(0.0, two_pi);
  return d;
}

QubitTriple build_qubit_triple(const QubitDraw& d, const Tolerances& tol) {
  DensityMatrix rho = validate_state(ComplexMatrix::diagonal({1.0 - d.p1, d.p1}), tol);

  const Complex c = std::polar(std::sqrt(d.c_sq), d.c_phase);
  ComplexMatrix s(2);
  s(0, 0) = 1.0 - d.q1;
  s(1, 1) = d.q1;
  s(0, 1) = c;
  s(1, 0) = std::conj(c);
  DensityMatrix sigma = validate_state(s, tol);

  const Complex dd = std::polar(std::sqrt(d.d_sq), d.d_phase);
  ComplexMatrix th(2);
  th(0, 0) = -d.omega;
  th(1, 1) = d.omega;
  th(0, 1) = dd;
  th(1, 0) = std::conj(dd);
  return QubitTriple{make_observable(HermitianOperator(th, tol), tol), std::move(rho),
                    std::move(sigma)};
}

QubitTriple sample_qubit_triple(RandomStream& rng, const Tolerances& tol) {
  return build_qubit_triple(sample_qubit_draw(rng), tol);
}

RejectionPolicy parse_rejection_policy(const std::string& name) {
  if (name == "redraw") return RejectionPolicy::redraw;
  if (name == "report-infinite" || name == "report_infinite") return RejectionPolicy::report_infinite;
  throw ValidationError("unknown rejection policy '" + name +
                        "' (expected redraw or report-infinite)");
}

void DrawConfig::validate() const {
  if (n_draws < 1) throw ValidationError("n_draws must be at least 1");
  if (threads < 1) throw ValidationError("threads must be at least 1");
  if (max_redraws < 0) throw ValidationError("max_redraws must be nonnegative");
}

DrawRecord evaluate_draw(std::int64_t index, const DrawConfig& cfg) {
  RandomStream rng =
      RandomStream::derive(cfg.master_seed, kQubitDrawStream, static_cast<std::uint64_t>(index));
  DrawRecord rec;
  rec.draw = index;
  for (;;) {
    const QubitTriple tr = sample_qubit_triple(rng, cfg.tolerances);
    const BoundReport rep = evaluate_bounds(tr.theta, tr.rho, tr.sigma, cfg.tolerances);
    if (!rep.s_tilde.finite() && cfg.rejection_policy == RejectionPolicy::redraw) {
      if (++rec.redraws > cfg.max_redraws) {
        throw NumericError("draw " + std::to_string(index) + ": exceeded " +
                           std::to_string(cfg.max_redraws) + " redraws");
      }
      continue;
    }
    rec.flux_ratio_sq = rep.flux_ratio_sq;
    rec.s_tilde = rep.s_tilde;
    rec.pinsker_rhs = rep.pinsker_rhs;
    rec.main_rhs = rep.main_rhs;
    rec.strengthened_rhs = rep.strengthened_rhs;
    rec.epsilon = rep.epsilon;
    const Verdict& main = rep.verdicts.at(verdict_name::main_bound);
    rec.main_slack = main.slack;
    rec.main_holds = main.holds;
    rec.strengthened_holds = rep.verdicts.at(verdict_name::strengthened).holds;
    rec.all_hold = rep.all_hold();
    return rec;
  }
}

MonteCarloResult run_montecarlo(const DrawConfig& cfg) {
  cfg.validate();
  MonteCarloResult result;
  result.records.resize(static_cast<std::size_t>(cfg.n_draws));

  const unsigned workers =
      static_cast<unsigned>(std::min<std::int64_t>(cfg.threads, cfg.n_draws));
  auto work = [&](unsigned worker, std::exception_ptr& failure) {
    try {
      for (std::int64_t i = worker; i < cfg.n_draws; i += workers) {
        result.records[static_cast<std::size_t>(i)] = evaluate_draw(i, cfg);
      }
    } catch (...) {
      failure = std::current_exception();
    }
  };
  std::vector<std::exception_ptr> failures(workers);
  if (workers == 1) {
    work(0, failures[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, std::ref(failures[w]));
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  MonteCarloSummary& s = result.summary;
  s.draws = cfg.n_draws;
  s.min_main_slack = std::numeric_limits<double>::infinity();
  for (const DrawRecord& r : result.records) {
    s.main_violations += r.main_holds ? 0 : 1;
    s.strengthened_violations += r.strengthened_holds ? 0 : 1;
    s.any_violations += r.all_hold ? 0 : 1;
    s.total_redraws += r.redraws;
    s.min_main_slack = std::min(s.min_main_slack, r.main_slack);
    if (!r.s_tilde.finite()) {
      ++s.infinite_s_tilde;
      continue;
    }
    if (r.s_tilde.value() >= 2.0) {
      ++s.far_from_equilibrium;
      if (r.main_rhs < 1.0) ++s.far_and_nontrivial;
    }
  }
  return result;
}

Table montecarlo_table(const MonteCarloResult& result) {
  Table t{{"draw", "flux_ratio_sq", "s_tilde", "pinsker_rhs", "main_rhs", "strengthened_rhs",
           "epsilon", "redraws"},
          {}};
  t.rows.reserve(result.records.size());
  for (const DrawRecord& r : result.records) {
    t.rows.push_back({r.draw, r.flux_ratio_sq, r.s_tilde, r.pinsker_rhs, r.main_rhs,
                      r.strengthened_rhs, r.epsilon, r.redraws});
  }
  return t;
}

Table spinpair_table(const std::vector<SpinPairPoint>& points) {
  Table t{{"t", "flux", "flux_analytic", "two_phi_sq", "onsager", "s_tilde"}, {}};
  t.rows.reserve(points.size());
  for (const SpinPairPoint& p : points) {
    t.rows.push_back({p.t, p.flux, p.flux_analytic, p.two_phi_sq, p.onsager, p.s_tilde});
  }
  return t;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps) {
  if (steps == 0) throw ValidationError("grid needs at least one point");
  if (!(hi >= lo)) throw ValidationError("grid needs hi >= lo");
  if (steps == 1) return {lo};
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return grid;
}

std::vector<SaturationRow> run_saturation(const std::vector<double>& a_grid,
                                          const Tolerances& tol) {
  std::vector<SaturationRow> rows;
  rows.reserve(a_grid.size());
  for (double a : a_grid) {
    const SaturatingPair pair = saturating_family(a, tol);
    const double tn = trace_distance_norm(pair.rho, pair.sigma, tol);
    const RelEntropyValue s = symmetric_relative_entropy(pair.rho, pair.sigma, tol);
    SaturationRow row;
    row.a = a;
    row.tn_sq_over_4 = 0.25 * tn * tn;
    row.b_of_s_tilde = B(s);
    row.abs_diff = std::abs(row.tn_sq_over_4 - row.b_of_s_tilde);
    rows.push_back(row);
  }
  return rows;
}

Table saturation_table(const std::vector<SaturationRow>& rows) {
  Table t{{"a", "tn_sq_over_4", "B_of_s_tilde", "abs_diff"}, {}};
  t.rows.reserve(rows.size());
  for (const SaturationRow& r : rows) {
    t.rows.push_back({r.a, r.tn_sq_over_4, r.b_of_s_tilde, r.abs_diff});
  }
  return t;
}

}  // namespace fluxbound
