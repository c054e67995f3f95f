#include "fluxbound/flux_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fluxbound {

Observable make_observable(const HermitianOperator& h, const Tolerances& tol) {
  return Observable(h, eigh(h, tol));
}

double flux(const Observable& theta, const DensityMatrix& rho, const DensityMatrix& sigma,
            const Tolerances& tol) {
  if (rho.dim() != sigma.dim() || theta.dim() != rho.dim()) {
    throw ValidationError("flux: dimension mismatch");
  }
  return expectation(theta.op(), rho.matrix() - sigma.matrix(), tol);
}

std::vector<double> default_shift_grid(const Observable& theta, std::size_t points) {
  if (points < 2) throw ValidationError("shift grid needs at least two points");
  const double lo = theta.theta_min() - theta.capacity();
  const double hi = theta.theta_max() + theta.capacity();
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

OptimalShiftRecord optimal_shift_check(const Observable& theta, const std::vector<double>& grid,
                                       const Tolerances& tol) {
  if (grid.empty()) throw ValidationError("optimal shift check needs a non-empty grid");
  OptimalShiftRecord rec;
  rec.half_capacity = 0.5 * theta.capacity();
  rec.grid_minimum = schatten_norm(theta.op().shifted(grid.front()), SchattenOrder::infinity, tol);
  rec.grid_argmin = grid.front();
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = schatten_norm(theta.op().shifted(grid[i]), SchattenOrder::infinity, tol);
    if (v < rec.grid_minimum) {
      rec.grid_minimum = v;
      rec.grid_argmin = grid[i];
    }
    rec.grid_step = std::max(rec.grid_step, std::abs(grid[i] - grid[i - 1]));
  }
  rec.value_at_lambda_star =
      schatten_norm(theta.op().shifted(theta.lambda_star()), SchattenOrder::infinity, tol);
  rec.holds = rec.grid_minimum >= rec.half_capacity - tol.slack;
  return rec;
}

SignDecomposition sign_decomposition(const DensityMatrix& rho, const DensityMatrix& sigma,
                                     std::optional<double> zero_tolerance, const Tolerances& tol) {
  if (rho.dim() != sigma.dim()) throw ValidationError("sign decomposition: dimension mismatch");
  const std::size_t n = rho.dim();
  const Spectrum diff = eigh(HermitianOperator(rho.matrix() - sigma.matrix(), tol), tol);

  const double diff_norm =
      std::max(std::abs(diff.eigenvalues.front()), std::abs(diff.eigenvalues.back()));
  const double zero_tol =
      zero_tolerance.value_or(tol.sign_zero_relative * std::max(1.0, diff_norm));

  double trace_norm = 0.0;
  for (double w : diff.eigenvalues) trace_norm += std::abs(w);
  if (trace_norm <= zero_tol) {
    throw DegenerateInputError("sign decomposition: states coincide (||rho - sigma||_1 = " +
                               std::to_string(trace_norm) + ")");
  }

  std::vector<Complex> signs(n);
  std::vector<Complex> kernel(n);
  std::size_t kernel_rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = diff.eigenvalues[k];
    if (std::abs(w) <= zero_tol) {
      kernel[k] = 1.0;
      ++kernel_rank;
    } else {
      signs[k] = w > 0.0 ? 1.0 : -1.0;
    }
  }
  ComplexMatrix om(n), eps(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Complex proj = diff.eigenvectors(i, k) * std::conj(diff.eigenvectors(j, k));
        om(i, j) += signs[k] * proj;
        eps(i, j) += kernel[k] * proj;
      }
  }
  SignDecomposition out{HermitianOperator(om, tol), HermitianOperator(eps, tol), 0.0, zero_tol,
                        kernel_rank};
  out.epsilon = kernel_rank == 0 ? 0.0 : expectation(out.epsilon_op, rho, tol);
  return out;
}

QturRecord qtur_check(const HermitianOperator& omega, const DensityMatrix& rho,
                      const DensityMatrix& sigma, const Tolerances& tol,
                      const BoundFunctionConfig& cfg) {
  QturRecord r;
  const HermitianOperator omega_sq(omega.matrix() * omega.matrix(), tol);
  r.mean_rho = expectation(omega, rho, tol);
  r.mean_sigma = expectation(omega, sigma, tol);
  const double gap = r.mean_rho - r.mean_sigma;
  if (std::abs(gap) <= tol.rank) {
    throw DegenerateInputError("qTUR check: <omega>_rho equals <omega>_sigma");
  }
  r.var_rho = expectation(omega_sq, rho, tol) - r.mean_rho * r.mean_rho;
  r.var_sigma = expectation(omega_sq, sigma, tol) - r.mean_sigma * r.mean_sigma;
  r.lhs = (r.var_rho + r.var_sigma) / (0.5 * gap * gap);
  r.s_tilde = symmetric_relative_entropy(rho, sigma, tol);
  r.rhs = r.s_tilde.finite() ? f(r.s_tilde.value(), cfg) : 0.0;
  // lhs >= rhs
  r.verdict = make_verdict(r.rhs, r.lhs, tol.slack);
  return r;
}

bool BoundReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const auto& kv) { return kv.second.holds; });
}

BoundReport evaluate_bounds(const Observable& theta, const DensityMatrix& rho,
                            const DensityMatrix& sigma, const Tolerances& tol,
                            const BoundFunctionConfig& cfg) {
  BoundReport rep;
  rep.flux = flux(theta, rho, sigma, tol);
  rep.capacity = theta.capacity();
  const double theta_scale =
      std::max({1.0, std::abs(theta.theta_max()), std::abs(theta.theta_min())});
  rep.degenerate_observable = rep.capacity <= tol.rank * theta_scale;
  const double ratio = rep.degenerate_observable ? 0.0 : rep.flux / rep.capacity;
  rep.flux_ratio_sq = ratio * ratio;

  rep.s_forward = relative_entropy(rho, sigma, tol);
  rep.s_backward = relative_entropy(sigma, rho, tol);
  rep.s_tilde = (rep.s_forward.finite() && rep.s_backward.finite())
                    ? RelEntropyValue(0.5 * (rep.s_forward.value() + rep.s_backward.value()))
                    : RelEntropyValue::infinity();
  rep.pinsker_rhs = rep.s_tilde.finite() ? RelEntropyValue(0.5 * rep.s_tilde.value())
                                         : RelEntropyValue::infinity();
  rep.trace_norm = trace_distance_norm(rho, sigma, tol);

  try {
    rep.epsilon = sign_decomposition(rho, sigma, std::nullopt, tol).epsilon;
  } catch (const DegenerateInputError&) {
    // Every w_k vanishes: the kernel projector is the identity.
    rep.coincident_states = true;
    rep.epsilon = 1.0;
  }

  const double b = B(rep.s_tilde, cfg);
  rep.main_rhs = b;
  rep.strengthened_rhs = (1.0 - rep.epsilon) * b;

  const double tn_sq_4 = 0.25 * rep.trace_norm * rep.trace_norm;
  auto& v = rep.verdicts;
  v[verdict_name::capacity] = make_verdict(std::abs(rep.flux), rep.capacity, tol.slack);
  v[verdict_name::trace_norm] = make_verdict(rep.flux_ratio_sq, tn_sq_4, tol.slack);
  if (rep.s_forward.finite()) {
    v[verdict_name::pinsker_forward] =
        make_verdict(tn_sq_4, 0.5 * rep.s_forward.value(), tol.slack);
  }
  if (rep.s_tilde.finite()) {
    v[verdict_name::pinsker_symmetric] = make_verdict(tn_sq_4, rep.pinsker_rhs.value(), tol.slack);
  }
  v[verdict_name::strengthened] = make_verdict(tn_sq_4, rep.strengthened_rhs, tol.slack);
  v[verdict_name::main_bound] = make_verdict(rep.flux_ratio_sq, rep.main_rhs, tol.slack);

  // Round-off may push |r| a hair above 1; larger excursions already fail
  // the capacity verdict.
  const double r = std::clamp(std::abs(ratio), 0.0, 1.0);
  const ExtendedReal two_r_artanh = onsager_like(r);
  if (rep.s_tilde.finite()) {
    v[verdict_name::onsager_like] =
        two_r_artanh.finite()
            ? make_verdict(0.5 * two_r_artanh.value(), 0.5 * rep.s_tilde.value(), tol.slack)
            : Verdict{false, -rep.s_tilde.value()};
  }
  if (two_r_artanh.finite()) {
    v[verdict_name::onsager_quadratic] = make_verdict(r * r, 0.5 * two_r_artanh.value(), tol.slack);
  }
  return rep;
}

}  // namespace fluxbound
