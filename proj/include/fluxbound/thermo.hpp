#pragma once

// System/environment scenarios: a product state evolved by a global unitary,
// its entropy production, entropy flux, correlations, and the two-spin
// exchange model. Two-qubit basis order is |g,g>, |g,e>, |e,g>, |e,e>
// with the system index first.

#include <vector>

#include "fluxbound/flux_bounds.hpp"

namespace fluxbound {

class BipartiteScenario {
 public:
  /// Throws ValidationError when U is not unitary or dimensions disagree.
  BipartiteScenario(DensityMatrix rho_s0, DensityMatrix rho_e0, ComplexMatrix unitary,
                    const Tolerances& tol = default_tolerances());

  std::size_t dim_s() const { return rho_s0_.dim(); }
  std::size_t dim_e() const { return rho_e0_.dim(); }
  const DensityMatrix& rho_s0() const { return rho_s0_; }
  const DensityMatrix& rho_e0() const { return rho_e0_; }
  const ComplexMatrix& unitary() const { return unitary_; }

 private:
  DensityMatrix rho_s0_;
  DensityMatrix rho_e0_;
  ComplexMatrix unitary_;
};

struct ScenarioOutcome {
  DensityMatrix rho_se_final;
  DensityMatrix rho_s_final;
  DensityMatrix rho_e_final;
  DensityMatrix reference;            // rho_S' (x) rho_E0 ("bath reset")
  RelEntropyValue entropy_production; // Sigma  = S(rho_SE' || rho_S' (x) rho_E)
  RelEntropyValue dual_production;    // Sigma* = S(rho_S' (x) rho_E || rho_SE')
};

ScenarioOutcome evolve(const BipartiteScenario& s, const Tolerances& tol = default_tolerances());

/// Phi = tr((rho_E - rho_E') ln rho_E) and its capacity Phi_L, the spectral
/// width of ln rho_E.
struct EntropyFlux {
  double phi = 0.0;
  double capacity = 0.0;
};

/// Rank-deficient environments (unbounded ln rho_E) raise DomainError.
EntropyFlux entropy_flux(const BipartiteScenario& s, const ScenarioOutcome& outcome,
                         const Tolerances& tol = default_tolerances());

/// Gibbs state exp(-beta H) / Z.
DensityMatrix thermal_environment(const HermitianOperator& hamiltonian, double beta,
                                  const Tolerances& tol = default_tolerances());

/// beta |E_max - E_min|
double thermal_entropy_flux_capacity(const HermitianOperator& hamiltonian, double beta,
                                     const Tolerances& tol = default_tolerances());

/// (Sigma + Sigma*)/2 >= S~(rho_E, rho_E') >= 2 r artanh r >= 2 r^2, r = Phi / Phi_L.
struct EntropyFluxChain {
  ExtendedReal production_mean;  // (Sigma + Sigma*)/2
  ExtendedReal s_tilde_env;
  double ratio = 0.0;
  ExtendedReal onsager;          // 2 r artanh r
  double quadratic = 0.0;        // 2 r^2
  Verdict data_processing;
  Verdict onsager_step;
  Verdict quadratic_step;

  bool holds() const { return data_processing.holds && onsager_step.holds && quadratic_step.holds; }
};

EntropyFluxChain entropy_flux_chain_check(const BipartiteScenario& s,
                                          const ScenarioOutcome& outcome,
                                          const Tolerances& tol = default_tolerances());

/// S~(rho_S(t), rho_S(0)) >= 2 r artanh r >= 2 r^2 for a local observable.
struct LocalSystemBound {
  double flux = 0.0;
  double ratio = 0.0;
  ExtendedReal s_tilde;
  ExtendedReal onsager;
  double quadratic = 0.0;
  Verdict onsager_step;
  Verdict quadratic_step;

  bool holds() const { return onsager_step.holds && quadratic_step.holds; }
};

LocalSystemBound local_system_bound_check(const Observable& theta_s, const DensityMatrix& rho_s_t,
                                          const DensityMatrix& rho_s_0,
                                          const Tolerances& tol = default_tolerances());

enum class ResetProtocol { bath_reset, both_reset };

/// C = tr((theta_S (x) theta_E)(rho_SE' - sigma)) with sigma = rho_S' (x) rho_E
/// (bath reset) or rho_S (x) rho_E (both reset).
double correlation(const Observable& theta_s, const Observable& theta_e,
                   const BipartiteScenario& s, const ScenarioOutcome& outcome,
                   ResetProtocol protocol, const Tolerances& tol = default_tolerances());

/// C^2 / (theta_max - theta_min)^2 <= B((Sigma + Sigma*)/2) for the bath-reset protocol.
struct CorrelationBound {
  double correlation = 0.0;
  double capacity = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  Verdict verdict;
};

CorrelationBound correlation_bound_check(const Observable& theta_s, const Observable& theta_e,
                                         const BipartiteScenario& s,
                                         const ScenarioOutcome& outcome,
                                         const Tolerances& tol = default_tolerances());

/// Diagonal two-level pair that saturates the trace-norm bound.
struct SaturatingPair {
  DensityMatrix rho;
  DensityMatrix sigma;
  double trace_norm = 0.0;  // 2 tanh(|a|/2)
  double s_tilde = 0.0;     // a tanh(a/2)
  double epsilon = 0.0;
};

SaturatingPair saturating_family(double a, const Tolerances& tol = default_tolerances());

struct SpinPairParams {
  double p = 0.9;       // initial excited population, system
  double q = 0.1;       // initial excited population, environment
  double omega = 1.0;   // level splitting
  double coupling = 2.0;
  double omega0 = 0.0;  // exchange phase
  std::vector<double> times;

  void validate() const;
};

/// Uniform grid of `steps` points on [0, t_max].
std::vector<double> uniform_times(double t_max, std::size_t steps);

/// Scenario of the exchange model at time t.
BipartiteScenario spin_pair_scenario(const SpinPairParams& params, double t,
                                     const Tolerances& tol = default_tolerances());

/// H_S (x) I + I (x) H_E
HermitianOperator spin_pair_total_energy(const SpinPairParams& params);

struct SpinPairPoint {
  double t = 0.0;
  double flux = 0.0;           // |tr(H_S (rho_S(t) - rho_S(0)))|
  double flux_analytic = 0.0;  // sin(g t)^2 |p - q| Omega
  double two_phi_sq = 0.0;     // 2 (phi / phi_L)^2
  ExtendedReal onsager;        // 2 (phi / phi_L) artanh(phi / phi_L)
  ExtendedReal s_tilde;        // S~(rho_S(t), rho_S(0))
  double total_energy = 0.0;
};

/// One record per entry of params.times, in the same order.
std::vector<SpinPairPoint> spin_pair_timeseries(const SpinPairParams& params,
                                                const Tolerances& tol = default_tolerances());

}  // namespace fluxbound
