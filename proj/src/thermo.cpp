#include "fluxbound/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fluxbound {

namespace {

// larger >= smaller, either side possibly infinite.
Verdict ordered(const ExtendedReal& larger, const ExtendedReal& smaller, double tolerance) {
  if (!larger.finite()) return {true, 0.0};
  if (!smaller.finite()) return {false, -1.0};
  return make_verdict(smaller.value(), larger.value(), tolerance);
}

ExtendedReal mean_of(const RelEntropyValue& a, const RelEntropyValue& b) {
  if (!a.finite() || !b.finite()) return ExtendedReal::infinity();
  return ExtendedReal(0.5 * (a.value() + b.value()));
}

double flux_ratio(double phi, double capacity, const Tolerances& tol) {
  if (capacity <= tol.rank) return 0.0;
  return std::clamp(phi / capacity, -1.0, 1.0);
}

}  // namespace

BipartiteScenario::BipartiteScenario(DensityMatrix rho_s0, DensityMatrix rho_e0,
                                     ComplexMatrix unitary, const Tolerances& tol)
    : rho_s0_(std::move(rho_s0)), rho_e0_(std::move(rho_e0)), unitary_(std::move(unitary)) {
  if (unitary_.dim() != rho_s0_.dim() * rho_e0_.dim()) {
    throw ValidationError("scenario: unitary dimension " + std::to_string(unitary_.dim()) +
                          " does not match " + std::to_string(rho_s0_.dim()) + " x " +
                          std::to_string(rho_e0_.dim()));
  }
  const double defect = unitarity_defect(unitary_);
  if (defect > tol.unitarity) {
    throw ValidationError("scenario: evolution is not unitary (defect " +
                          std::to_string(defect) + ")");
  }
}

ScenarioOutcome evolve(const BipartiteScenario& s, const Tolerances& tol) {
  const ComplexMatrix initial = tensor_product(s.rho_s0().matrix(), s.rho_e0().matrix());
  const ComplexMatrix& u = s.unitary();
  DensityMatrix rho_se = validate_state(u * initial * u.adjoint(), tol);
  DensityMatrix rho_s =
      validate_state(partial_trace(rho_se.matrix(), s.dim_s(), s.dim_e(), Subsystem::system), tol);
  DensityMatrix rho_e = validate_state(
      partial_trace(rho_se.matrix(), s.dim_s(), s.dim_e(), Subsystem::environment), tol);
  DensityMatrix reference =
      validate_state(tensor_product(rho_s.matrix(), s.rho_e0().matrix()), tol);

  RelEntropyValue sigma = relative_entropy(rho_se, reference, tol);
  RelEntropyValue sigma_dual = relative_entropy(reference, rho_se, tol);
  return ScenarioOutcome{std::move(rho_se), std::move(rho_s),     std::move(rho_e),
                         std::move(reference), sigma, sigma_dual};
}

EntropyFlux entropy_flux(const BipartiteScenario& s, const ScenarioOutcome& outcome,
                         const Tolerances& tol) {
  const Spectrum& sp = s.rho_e0().spectrum();
  if (sp.eigenvalues.front() <= s.rho_e0().rank_tolerance()) {
    throw DomainError("entropy flux: environment state is rank deficient, ln rho_E is unbounded",
                      sp.eigenvalues.front());
  }
  const HermitianOperator log_rho_e(
      matrix_function(sp, [](double l) { return Complex(std::log(l), 0.0); }), tol);
  EntropyFlux out;
  out.phi = expectation(log_rho_e, s.rho_e0().matrix() - outcome.rho_e_final.matrix(), tol);
  out.capacity = std::log(sp.eigenvalues.back()) - std::log(sp.eigenvalues.front());
  return out;
}

DensityMatrix thermal_environment(const HermitianOperator& hamiltonian, double beta,
                                  const Tolerances& tol) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("thermal environment requires beta > 0", beta);
  }
  Spectrum sp = eigh(hamiltonian, tol);
  const double e_min = sp.eigenvalues.front();
  double z = 0.0;
  for (double e : sp.eigenvalues) z += std::exp(-beta * (e - e_min));
  // Populations straight from the energies: ascending energy gives
  // descending weight, so reverse to keep the spectrum ascending.
  const std::size_t n = sp.eigenvalues.size();
  Spectrum gibbs{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = n - 1 - k;
    gibbs.eigenvalues[k] = std::exp(-beta * (sp.eigenvalues[src] - e_min)) / z;
    for (std::size_t i = 0; i < n; ++i) gibbs.eigenvectors(i, k) = sp.eigenvectors(i, src);
  }
  return validate_state(std::move(gibbs), tol);
}

double thermal_entropy_flux_capacity(const HermitianOperator& hamiltonian, double beta,
                                     const Tolerances& tol) {
  const Spectrum sp = eigh(hamiltonian, tol);
  return beta * std::abs(sp.eigenvalues.back() - sp.eigenvalues.front());
}

EntropyFluxChain entropy_flux_chain_check(const BipartiteScenario& s,
                                          const ScenarioOutcome& outcome, const Tolerances& tol) {
  const EntropyFlux ef = entropy_flux(s, outcome, tol);
  EntropyFluxChain c;
  c.production_mean = mean_of(outcome.entropy_production, outcome.dual_production);
  c.s_tilde_env = symmetric_relative_entropy(s.rho_e0(), outcome.rho_e_final, tol);
  c.ratio = flux_ratio(ef.phi, ef.capacity, tol);
  c.onsager = onsager_like(c.ratio);
  c.quadratic = 2.0 * c.ratio * c.ratio;
  c.data_processing = ordered(c.production_mean, c.s_tilde_env, tol.slack);
  c.onsager_step = ordered(c.s_tilde_env, c.onsager, tol.slack);
  c.quadratic_step = ordered(c.onsager, ExtendedReal(c.quadratic), tol.slack);
  return c;
}

LocalSystemBound local_system_bound_check(const Observable& theta_s, const DensityMatrix& rho_s_t,
                                          const DensityMatrix& rho_s_0, const Tolerances& tol) {
  LocalSystemBound b;
  b.flux = flux(theta_s, rho_s_t, rho_s_0, tol);
  b.ratio = flux_ratio(b.flux, theta_s.capacity(), tol);
  b.s_tilde = symmetric_relative_entropy(rho_s_t, rho_s_0, tol);
  b.onsager = onsager_like(b.ratio);
  b.quadratic = 2.0 * b.ratio * b.ratio;
  b.onsager_step = ordered(b.s_tilde, b.onsager, tol.slack);
  b.quadratic_step = ordered(b.onsager, ExtendedReal(b.quadratic), tol.slack);
  return b;
}

double correlation(const Observable& theta_s, const Observable& theta_e,
                   const BipartiteScenario& s, const ScenarioOutcome& outcome,
                   ResetProtocol protocol, const Tolerances& tol) {
  if (theta_s.dim() != s.dim_s() || theta_e.dim() != s.dim_e()) {
    throw ValidationError("correlation: observable dimensions do not match the scenario");
  }
  const HermitianOperator joint(tensor_product(theta_s.op().matrix(), theta_e.op().matrix()), tol);
  const double joint_mean = expectation(joint, outcome.rho_se_final, tol);
  const DensityMatrix& system_ref =
      protocol == ResetProtocol::bath_reset ? outcome.rho_s_final : s.rho_s0();
  return joint_mean - expectation(theta_s.op(), system_ref, tol) *
                          expectation(theta_e.op(), s.rho_e0(), tol);
}

CorrelationBound correlation_bound_check(const Observable& theta_s, const Observable& theta_e,
                                         const BipartiteScenario& s,
                                         const ScenarioOutcome& outcome, const Tolerances& tol) {
  CorrelationBound c;
  c.correlation = correlation(theta_s, theta_e, s, outcome, ResetProtocol::bath_reset, tol);
  const Observable joint = make_observable(
      HermitianOperator(tensor_product(theta_s.op().matrix(), theta_e.op().matrix()), tol), tol);
  c.capacity = joint.capacity();
  c.lhs = c.capacity > tol.rank ? (c.correlation / c.capacity) * (c.correlation / c.capacity) : 0.0;
  c.rhs = B(mean_of(outcome.entropy_production, outcome.dual_production));
  c.verdict = make_verdict(c.lhs, c.rhs, tol.slack);
  return c;
}

SaturatingPair saturating_family(double a, const Tolerances& tol) {
  if (!std::isfinite(a)) throw DomainError("saturating family requires finite a", a);
  const double z = 2.0 * std::cosh(0.5 * a);
  // index 0 is |0>, index 1 is |1>
  DensityMatrix rho =
      validate_state(ComplexMatrix::diagonal({std::exp(-0.5 * a) / z, std::exp(0.5 * a) / z}), tol);
  DensityMatrix sigma =
      validate_state(ComplexMatrix::diagonal({std::exp(0.5 * a) / z, std::exp(-0.5 * a) / z}), tol);
  return SaturatingPair{std::move(rho), std::move(sigma), 2.0 * std::tanh(0.5 * std::abs(a)),
                        a * std::tanh(0.5 * a), 0.0};
}

void SpinPairParams::validate() const {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw ValidationError("spin pair: populations must lie in [0, 1]");
  }
  if (!(omega > 0.0)) throw ValidationError("spin pair: level splitting must be positive");
  if (!(coupling > 0.0)) throw ValidationError("spin pair: coupling must be positive");
  if (!std::isfinite(omega0)) throw ValidationError("spin pair: phase must be finite");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || (i > 0 && times[i] < times[i - 1])) {
      throw ValidationError("spin pair: times must be nonnegative and ordered");
    }
  }
}

std::vector<double> uniform_times(double t_max, std::size_t steps) {
  if (steps == 0) throw ValidationError("time grid needs at least one point");
  if (!(t_max >= 0.0)) throw ValidationError("time grid needs t_max >= 0");
  if (steps == 1) return {0.0};
  std::vector<double> t(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    t[i] = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return t;
}

namespace {

HermitianOperator local_hamiltonian(double omega) { return HermitianOperator::diagonal({0.0, omega}); }

DensityMatrix qubit_state(double excited, const Tolerances& tol) {
  return validate_state(ComplexMatrix::diagonal({1.0 - excited, excited}), tol);
}

}  // namespace

BipartiteScenario spin_pair_scenario(const SpinPairParams& params, double t,
                                     const Tolerances& tol) {
  // G = g (e^{i w0} |g,e><e,g| + e^{-i w0} |e,g><g,e|)
  ComplexMatrix gen(4);
  gen(1, 2) = params.coupling * std::polar(1.0, params.omega0);
  gen(2, 1) = params.coupling * std::polar(1.0, -params.omega0);
  const HermitianOperator generator(gen, tol);
  return BipartiteScenario(qubit_state(params.p, tol), qubit_state(params.q, tol),
                           unitary_from_generator(generator, t, tol), tol);
}

HermitianOperator spin_pair_total_energy(const SpinPairParams& params) {
  const ComplexMatrix hs = local_hamiltonian(params.omega).matrix();
  const ComplexMatrix id = ComplexMatrix::identity(2);
  return HermitianOperator(tensor_product(hs, id) + tensor_product(id, hs));
}

std::vector<SpinPairPoint> spin_pair_timeseries(const SpinPairParams& params,
                                                const Tolerances& tol) {
  params.validate();
  const Observable h_s = make_observable(local_hamiltonian(params.omega), tol);
  const HermitianOperator total = spin_pair_total_energy(params);

  std::vector<SpinPairPoint> out;
  out.reserve(params.times.size());
  for (double t : params.times) {
    const BipartiteScenario scenario = spin_pair_scenario(params, t, tol);
    const ScenarioOutcome outcome = evolve(scenario, tol);
    const LocalSystemBound local =
        local_system_bound_check(h_s, outcome.rho_s_final, scenario.rho_s0(), tol);

    SpinPairPoint pt;
    pt.t = t;
    pt.flux = std::abs(local.flux);
    const double s = std::sin(params.coupling * t);
    pt.flux_analytic = s * s * std::abs(params.p - params.q) * params.omega;
    pt.two_phi_sq = local.quadratic;
    pt.onsager = local.onsager;
    pt.s_tilde = local.s_tilde;
    pt.total_energy = expectation(total, outcome.rho_se_final, tol);
    out.push_back(pt);
  }
  return out;
}

}  // namespace fluxbound
