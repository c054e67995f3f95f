#include "fluxbound/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fluxbound {

DensityMatrix validate_state(const ComplexMatrix& m, const Tolerances& tol) {
  HermitianOperator op(m, tol);  // Hermiticity invariant
  Spectrum spectrum = eigh(op, tol);

  const double min_eig = spectrum.eigenvalues.front();
  if (min_eig < -tol.negative_eigenvalue) {
    throw ValidationError("state is not positive semidefinite: eigenvalue " +
                          std::to_string(min_eig));
  }
  const double trace = op.matrix().trace().real();
  if (std::abs(trace - 1.0) > tol.trace) {
    throw ValidationError("state trace is " + std::to_string(trace) + ", expected 1");
  }

  if (min_eig >= 0.0) {
    return DensityMatrix(std::move(op), std::move(spectrum), tol.rank, false);
  }

  double sum = 0.0;
  for (double& l : spectrum.eigenvalues) {
    l = std::max(l, 0.0);
    sum += l;
  }
  for (double& l : spectrum.eigenvalues) l /= sum;
  HermitianOperator repaired(spectrum.reconstruct(), tol);
  return DensityMatrix(std::move(repaired), std::move(spectrum), tol.rank, true);
}

DensityMatrix validate_state(Spectrum spectrum, const Tolerances& tol) {
  auto& ev = spectrum.eigenvalues;
  if (ev.empty() || spectrum.eigenvectors.dim() != ev.size()) {
    throw ValidationError("state spectrum: eigenvector matrix does not match eigenvalue count");
  }
  if (!std::is_sorted(ev.begin(), ev.end())) {
    throw ValidationError("state spectrum: eigenvalues must be ascending");
  }
  const double defect = unitarity_defect(spectrum.eigenvectors);
  if (defect > tol.unitarity) {
    throw ValidationError("state spectrum: eigenvectors are not orthonormal (defect " +
                          std::to_string(defect) + ")");
  }
  if (ev.front() < -tol.negative_eigenvalue) {
    throw ValidationError("state is not positive semidefinite: eigenvalue " +
                          std::to_string(ev.front()));
  }
  double sum = 0.0;
  for (double l : ev) sum += l;
  if (std::abs(sum - 1.0) > tol.trace) {
    throw ValidationError("state trace is " + std::to_string(sum) + ", expected 1");
  }
  const bool clamped = ev.front() < 0.0;
  if (clamped) {
    sum = 0.0;
    for (double& l : ev) {
      l = std::max(l, 0.0);
      sum += l;
    }
    for (double& l : ev) l /= sum;
  }
  HermitianOperator op(spectrum.reconstruct(), tol);
  return DensityMatrix(std::move(op), std::move(spectrum), tol.rank, clamped);
}

double expectation(const HermitianOperator& h, const DensityMatrix& rho, const Tolerances& tol) {
  return expectation(h, rho.matrix(), tol);
}

RelEntropyValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                 const Tolerances& tol) {
  if (rho.dim() != sigma.dim()) {
    throw ValidationError("relative entropy: dimension mismatch " + std::to_string(rho.dim()) +
                          " vs " + std::to_string(sigma.dim()));
  }
  const std::size_t n = rho.dim();
  const auto& p = rho.spectrum().eigenvalues;
  const auto& s = sigma.spectrum().eigenvalues;
  const ComplexMatrix& pv = rho.spectrum().eigenvectors;
  const ComplexMatrix& sv = sigma.spectrum().eigenvectors;
  const double rank_tol = std::max(rho.rank_tolerance(), sigma.rank_tolerance());

  double neg_entropy = 0.0;
  for (double pi : p)
    if (pi > rank_tol) neg_entropy += pi * std::log(pi);

  double cross = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    // weight of rho on |s_j>: sum_i p_i |<p_i|s_j>|^2
    double weight = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] <= rank_tol) continue;
      Complex overlap = 0.0;
      for (std::size_t k = 0; k < n; ++k) overlap += std::conj(pv(k, i)) * sv(k, j);
      weight += p[i] * std::norm(overlap);
    }
    if (s[j] <= rank_tol) {
      if (weight > rank_tol) return RelEntropyValue::infinity();
      continue;
    }
    cross += weight * std::log(s[j]);
  }

  const double value = neg_entropy - cross;
  // Round-off below zero is clamped; anything more negative is a real defect.
  if (value < -tol.negative_eigenvalue) {
    throw NumericError("relative entropy evaluated to " + std::to_string(value));
  }
  return RelEntropyValue(std::max(value, 0.0));
}

RelEntropyValue symmetric_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                           const Tolerances& tol) {
  const RelEntropyValue forward = relative_entropy(rho, sigma, tol);
  const RelEntropyValue backward = relative_entropy(sigma, rho, tol);
  if (!forward.finite() || !backward.finite()) return RelEntropyValue::infinity();
  return RelEntropyValue(0.5 * (forward.value() + backward.value()));
}

double trace_distance_norm(const DensityMatrix& rho, const DensityMatrix& sigma,
                           const Tolerances& tol) {
  if (rho.dim() != sigma.dim()) {
    throw ValidationError("trace distance: dimension mismatch");
  }
  return schatten_norm(HermitianOperator(rho.matrix() - sigma.matrix(), tol), SchattenOrder::one,
                       tol);
}

PinskerRecord pinsker_check(const DensityMatrix& rho, const DensityMatrix& sigma,
                            const Tolerances& tol) {
  PinskerRecord r;
  r.relative_entropy = relative_entropy(rho, sigma, tol);
  r.trace_norm = trace_distance_norm(rho, sigma, tol);
  r.rhs = 0.5 * r.trace_norm * r.trace_norm;
  if (!r.relative_entropy.finite()) {
    r.trivially_satisfied = true;
    return r;
  }
  r.slack = r.relative_entropy.value() - r.rhs;
  r.holds = r.slack >= -tol.slack;
  return r;
}

}  // namespace fluxbound
