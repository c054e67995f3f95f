#include "fluxbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <json.hpp>

namespace fluxbound {

namespace {

constexpr std::uint64_t kQubitPairStream = 2;
constexpr std::uint64_t kHigherDimStream = 30;  // + dim
constexpr std::uint64_t kObservableStream = 5;
constexpr std::uint64_t kScenarioStream = 6;
constexpr std::uint64_t kThermalStream = 7;

constexpr double kLambdaStarTolerance = 1e-12;
constexpr double kSaturationTolerance = 1e-8;
constexpr double kThermalIdentityTolerance = 1e-10;

class Suites {
 public:
  Suites(const VerifyConfig& cfg) : cfg_(cfg) {}

  SuiteResult& operator[](const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, suites_.size()).first;
      SuiteResult s;
      s.name = name;
      s.min_slack = std::numeric_limits<double>::infinity();
      suites_.push_back(s);
    }
    return suites_[it->second];
  }

  void check(const std::string& name, double slack, std::int64_t draw) {
    (*this)[name].record(slack, cfg_.tolerances.slack, cfg_.master_seed, draw);
  }

  void check(const std::string& name, const Verdict& v, std::int64_t draw) {
    check(name, v.slack, draw);
  }

  /// |a - b| <= tolerance, recorded as slack -|a - b|.
  void identity(const std::string& name, double a, double b, double tolerance, std::int64_t draw) {
    (*this)[name].record(-std::abs(a - b), tolerance, cfg_.master_seed, draw);
  }

  std::vector<SuiteResult> take() { return std::move(suites_); }

 private:
  const VerifyConfig& cfg_;
  std::map<std::string, std::size_t> index_;
  std::vector<SuiteResult> suites_;
};

// Checks that need only a pair of states and an observable.
void check_pair(Suites& s, const Observable& theta, const DensityMatrix& rho,
                const DensityMatrix& sigma, std::int64_t draw, const VerifyConfig& cfg) {
  const Tolerances& tol = cfg.tolerances;
  const BoundReport rep = evaluate_bounds(theta, rho, sigma, tol);
  auto verdict = [&](const char* key, const std::string& suite) {
    const auto it = rep.verdicts.find(key);
    if (it != rep.verdicts.end()) s.check(suite, it->second, draw);
  };
  verdict(verdict_name::capacity, "capacity");
  verdict(verdict_name::trace_norm, "trace_norm");
  verdict(verdict_name::pinsker_forward, "pinsker_forward");
  verdict(verdict_name::pinsker_symmetric, "pinsker_symmetric");
  verdict(verdict_name::strengthened, "strengthened");
  verdict(verdict_name::onsager_like, "onsager_like");
  verdict(verdict_name::onsager_quadratic, "onsager_quadratic");
  s.check("main_bound", cfg.main_bound(rep.s_tilde) - rep.flux_ratio_sq, draw);

  if (rep.coincident_states) return;
  const SignDecomposition sd = sign_decomposition(rho, sigma, std::nullopt, tol);
  const double mean_gap = expectation(sd.omega, rho, tol) - expectation(sd.omega, sigma, tol);
  s.identity("sign_trace_norm", mean_gap, rep.trace_norm, tol.slack, draw);
  const ComplexMatrix completeness = sd.omega.matrix() * sd.omega.matrix() +
                                     sd.epsilon_op.matrix() -
                                     ComplexMatrix::identity(rho.dim());
  s.identity("sign_completeness", completeness.max_abs(), 0.0, tol.slack, draw);
  s.identity("kernel_balance", expectation(sd.epsilon_op, rho, tol),
             expectation(sd.epsilon_op, sigma, tol), tol.slack, draw);
  s.check("qtur", qtur_check(sd.omega, rho, sigma, tol).verdict, draw);
}

void check_scenario(Suites& s, const BipartiteScenario& sc, const Observable& theta_s,
                    const Observable& theta_e, std::int64_t draw, const VerifyConfig& cfg) {
  const Tolerances& tol = cfg.tolerances;
  const ScenarioOutcome out = evolve(sc, tol);
  const EntropyFluxChain chain = entropy_flux_chain_check(sc, out, tol);
  s.check("env_data_processing", chain.data_processing, draw);
  s.check("env_onsager_step", chain.onsager_step, draw);
  s.check("env_quadratic_step", chain.quadratic_step, draw);
  const LocalSystemBound local =
      local_system_bound_check(theta_s, out.rho_s_final, sc.rho_s0(), tol);
  s.check("local_onsager_step", local.onsager_step, draw);
  s.check("local_quadratic_step", local.quadratic_step, draw);
  s.check("correlation", correlation_bound_check(theta_s, theta_e, sc, out, tol).verdict,
          draw);
}

}  // namespace

void SuiteResult::record(double slack, double tolerance, std::uint64_t seed, std::int64_t draw) {
  ++checks;
  min_slack = std::min(min_slack, slack);
  if (slack >= -tolerance) return;
  ++violations;
  if (!first_violation) first_violation = Violation{seed, draw, slack};
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.violations == 0 && s.checks > 0; });
}

const SuiteResult& VerifyReport::suite(const std::string& name) const {
  for (const auto& s : suites)
    if (s.name == name) return s;
  throw ValidationError("no verification suite named " + name);
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["seed"] = master_seed;
  j["passed"] = passed();
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : suites) {
    nlohmann::ordered_json e;
    e["name"] = s.name;
    e["checks"] = s.checks;
    e["violations"] = s.violations;
    e["min_slack"] = s.min_slack;
    if (s.first_violation) {
      e["first_violation"] = {{"seed", s.first_violation->seed},
                              {"draw", s.first_violation->draw},
                              {"slack", s.first_violation->slack}};
    } else {
      e["first_violation"] = nullptr;
    }
    j["suites"].push_back(std::move(e));
  }
  return j.dump();
}

Table VerifyReport::to_table() const {
  Table t{{"suite", "checks", "violations", "min_slack", "first_violation_draw"}, {}};
  for (const auto& s : suites) {
    t.rows.push_back({s.name, s.checks, s.violations, s.min_slack,
                      s.first_violation ? Cell{s.first_violation->draw} : Cell{std::string{}}});
  }
  return t;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  const Tolerances& tol = cfg.tolerances;
  Suites s(cfg);
  std::int64_t draw = 0;

  // Random-qubit triples of the Monte Carlo experiment.
  for (std::int64_t i = 0; i < cfg.qubit_draws; ++i) {
    RandomStream rng = RandomStream::derive(cfg.master_seed, kQubitDrawStream,
                                            static_cast<std::uint64_t>(i));
    const QubitTriple tr = sample_qubit_triple(rng, tol);
    check_pair(s, tr.theta, tr.rho, tr.sigma, i, cfg);
  }
  draw = cfg.qubit_draws;

  // Generic full-rank pairs in dims 2..4 with random observables.
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    const std::int64_t n = dim == 2 ? cfg.qubit_draws : cfg.higher_dim_draws;
    const std::uint64_t stream = dim == 2 ? kQubitPairStream : kHigherDimStream + dim;
    for (std::int64_t i = 0; i < n; ++i, ++draw) {
      RandomStream rng = RandomStream::derive(cfg.master_seed, stream, static_cast<std::uint64_t>(i));
      const DensityMatrix rho = random_density(dim, rng, tol);
      const DensityMatrix sigma = random_density(dim, rng, tol);
      const Observable theta = make_observable(random_hermitian(dim, rng), tol);
      check_pair(s, theta, rho, sigma, draw, cfg);
    }
  }

  // Saturating two-level family: tight in the trace-norm, strengthened and
  // main bounds and in the qTUR.
  const Observable pauli_z = make_observable(HermitianOperator::diagonal({1.0, -1.0}), tol);
  for (int k = 1; k <= 100; ++k, ++draw) {
    const double a = 0.1 * k;
    const SaturatingPair pair = saturating_family(a, tol);
    check_pair(s, pauli_z, pair.rho, pair.sigma, draw, cfg);
    const double tn = trace_distance_norm(pair.rho, pair.sigma, tol);
    s.identity("saturation", 0.25 * tn * tn,
               B(symmetric_relative_entropy(pair.rho, pair.sigma, tol)), kSaturationTolerance,
               draw);
    const QturRecord q = qtur_check(pauli_z.op(), pair.rho, pair.sigma, tol);
    s.identity("qtur_saturation", q.lhs, q.rhs, kSaturationTolerance, draw);
  }

  // Optimal shift of random observables.
  for (std::int64_t i = 0; i < cfg.observable_draws; ++i, ++draw) {
    RandomStream rng =
        RandomStream::derive(cfg.master_seed, kObservableStream, static_cast<std::uint64_t>(i));
    const std::size_t dim = 2 + static_cast<std::size_t>(i % 3);
    const Observable theta = make_observable(random_hermitian(dim, rng), tol);
    const OptimalShiftRecord rec =
        optimal_shift_check(theta, default_shift_grid(theta, cfg.shift_grid_points), tol);
    s["shift_grid_minimum"].record(rec.grid_minimum - rec.half_capacity, rec.grid_step,
                                  cfg.master_seed, draw);
    s.identity("shift_lambda_star", rec.value_at_lambda_star, rec.half_capacity,
               kLambdaStarTolerance, draw);
  }

  // Random 2 x 2 system/environment scenarios.
  for (std::int64_t i = 0; i < cfg.scenario_draws; ++i, ++draw) {
    RandomStream rng =
        RandomStream::derive(cfg.master_seed, kScenarioStream, static_cast<std::uint64_t>(i));
    const DensityMatrix rho_s = random_density(2, rng, tol);
    const DensityMatrix rho_e = random_density(2, rng, tol);
    const ComplexMatrix u = random_unitary(4, rng, tol);
    const Observable theta_s = make_observable(random_hermitian(2, rng), tol);
    const Observable theta_e = make_observable(random_hermitian(2, rng), tol);
    check_scenario(s, BipartiteScenario(rho_s, rho_e, u, tol), theta_s, theta_e, draw, cfg);
  }

  // Thermal environments: entropy flux equals beta times the energy change.
  for (std::int64_t i = 0; i < cfg.scenario_draws; ++i, ++draw) {
    RandomStream rng =
        RandomStream::derive(cfg.master_seed, kThermalStream, static_cast<std::uint64_t>(i));
    const HermitianOperator h_e = random_hermitian(2, rng);
    const double beta = rng.uniform(0.1, 5.0);
    const DensityMatrix rho_e = thermal_environment(h_e, beta, tol);
    const DensityMatrix rho_s = random_density(2, rng, tol);
    const BipartiteScenario sc(rho_s, rho_e, random_unitary(4, rng, tol), tol);
    const ScenarioOutcome out = evolve(sc, tol);
    const EntropyFlux ef = entropy_flux(sc, out, tol);
    const double energy = beta * expectation(h_e, out.rho_e_final.matrix() - rho_e.matrix(), tol);
    s.identity("thermal_entropy_flux", ef.phi, energy, kThermalIdentityTolerance, draw);
    s.identity("thermal_capacity", ef.capacity, thermal_entropy_flux_capacity(h_e, beta, tol),
               kThermalIdentityTolerance, draw);
  }

  // Two-spin exchange model over the default time grid.
  SpinPairParams params;
  params.times = uniform_times(1.5, 301);
  const Observable h_s = make_observable(HermitianOperator::diagonal({0.0, params.omega}), tol);
  for (double t : params.times) {
    const BipartiteScenario sc = spin_pair_scenario(params, t, tol);
    check_scenario(s, sc, h_s, pauli_z, draw, cfg);
    ++draw;
  }

  VerifyReport report;
  report.master_seed = cfg.master_seed;
  report.suites = s.take();
  return report;
}

}  // namespace fluxbound
