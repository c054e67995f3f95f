#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fluxbound/bound_functions.hpp"
#include "fluxbound/quantum_state.hpp"

namespace fluxbound {

/// Bounded observable with its spectral extremes, capacity
/// phi_L = theta_max - theta_min and optimal shift (theta_max + theta_min)/2.
class Observable {
 public:
  const HermitianOperator& op() const { return op_; }
  const Spectrum& spectrum() const { return spectrum_; }
  std::size_t dim() const { return op_.dim(); }
  double theta_max() const { return spectrum_.eigenvalues.back(); }
  double theta_min() const { return spectrum_.eigenvalues.front(); }
  double capacity() const { return theta_max() - theta_min(); }
  double lambda_star() const { return 0.5 * (theta_max() + theta_min()); }

 private:
  Observable(HermitianOperator op, Spectrum spectrum)
      : op_(std::move(op)), spectrum_(std::move(spectrum)) {}
  friend Observable make_observable(const HermitianOperator&, const Tolerances&);

  HermitianOperator op_;
  Spectrum spectrum_;
};

Observable make_observable(const HermitianOperator& h, const Tolerances& tol = default_tolerances());

/// phi = tr(theta (rho - sigma))
double flux(const Observable& theta, const DensityMatrix& rho, const DensityMatrix& sigma,
            const Tolerances& tol = default_tolerances());

struct Verdict {
  bool holds = true;
  double slack = 0.0;  // rhs - lhs of the inequality; >= -tolerance when it holds
};

inline Verdict make_verdict(double lhs, double rhs, double tolerance) {
  return {rhs - lhs >= -tolerance, rhs - lhs};
}

struct OptimalShiftRecord {
  double grid_minimum = 0.0;       // min over grid of ||theta - lambda I||_inf
  double grid_argmin = 0.0;
  double value_at_lambda_star = 0.0;
  double half_capacity = 0.0;
  double grid_step = 0.0;          // largest spacing between consecutive grid points
  bool holds = true;               // grid_minimum >= half_capacity - tolerance
};

/// Grid search of lambda -> ||theta - lambda I||_inf, each norm from a fresh
/// eigendecomposition of the shifted operator.
OptimalShiftRecord optimal_shift_check(const Observable& theta, const std::vector<double>& grid,
                                       const Tolerances& tol = default_tolerances());

/// Uniform grid over [theta_min - capacity, theta_max + capacity].
std::vector<double> default_shift_grid(const Observable& theta, std::size_t points);

/// Split of rho - sigma = sum_k w_k |w_k><w_k| into the sign operator
/// omega = sum_{w_k != 0} sign(w_k) |w_k><w_k| and the kernel projector epsilon_op.
struct SignDecomposition {
  HermitianOperator omega;
  HermitianOperator epsilon_op;
  double epsilon = 0.0;  // <epsilon_op>_rho, equal to <epsilon_op>_sigma
  double zero_tolerance = 0.0;
  std::size_t kernel_rank = 0;
};

/// zero_tolerance defaults to sign_zero_relative * max(1, ||rho - sigma||_inf).
/// Coinciding states raise DegenerateInputError.
SignDecomposition sign_decomposition(const DensityMatrix& rho, const DensityMatrix& sigma,
                                     std::optional<double> zero_tolerance = std::nullopt,
                                     const Tolerances& tol = default_tolerances());

struct QturRecord {
  double mean_rho = 0.0;
  double mean_sigma = 0.0;
  double var_rho = 0.0;
  double var_sigma = 0.0;
  double lhs = 0.0;  // (Var_rho + Var_sigma) / ((1/2)(mean_rho - mean_sigma)^2)
  RelEntropyValue s_tilde;
  double rhs = 0.0;  // f(s_tilde); 0 when s_tilde is infinite
  Verdict verdict;
};

/// Variance-ratio lower bound by f of the symmetric relative entropy.
QturRecord qtur_check(const HermitianOperator& omega, const DensityMatrix& rho,
                      const DensityMatrix& sigma, const Tolerances& tol = default_tolerances(),
                      const BoundFunctionConfig& cfg = default_bound_config());

namespace verdict_name {
inline constexpr const char* capacity = "capacity";                    // |phi| <= phi_L
inline constexpr const char* trace_norm = "trace_norm";                // ratio^2 <= ||.||_1^2/4
inline constexpr const char* pinsker_forward = "pinsker_forward";      // ||.||_1^2/4 <= S(rho||sigma)/2
inline constexpr const char* pinsker_symmetric = "pinsker_symmetric";  // ||.||_1^2/4 <= S~/2
inline constexpr const char* strengthened = "strengthened";            // ||.||_1^2/4 <= (1-eps) B(S~)
inline constexpr const char* main_bound = "main";                      // ratio^2 <= B(S~)
inline constexpr const char* onsager_like = "onsager_like";            // (S+S*)/4 >= r artanh r
inline constexpr const char* onsager_quadratic = "onsager_quadratic";  // r artanh r >= r^2
}  // namespace verdict_name

struct BoundReport {
  double flux = 0.0;
  double capacity = 0.0;
  double flux_ratio_sq = 0.0;
  RelEntropyValue s_forward;
  RelEntropyValue s_backward;
  RelEntropyValue s_tilde;
  RelEntropyValue pinsker_rhs;  // S~/2
  double main_rhs = 0.0;        // B(S~)
  double strengthened_rhs = 0.0;  // (1 - eps) B(S~)
  double trace_norm = 0.0;
  double epsilon = 0.0;
  /// theta proportional to identity; the ratio is reported as 0.
  bool degenerate_observable = false;
  /// rho and sigma coincide within the sign-decomposition tolerance.
  bool coincident_states = false;
  std::map<std::string, Verdict> verdicts;

  bool all_hold() const;
};

BoundReport evaluate_bounds(const Observable& theta, const DensityMatrix& rho,
                            const DensityMatrix& sigma,
                            const Tolerances& tol = default_tolerances(),
                            const BoundFunctionConfig& cfg = default_bound_config());

}  // namespace fluxbound
