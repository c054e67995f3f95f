#pragma once

#include "fluxbound/hermitian.hpp"

namespace fluxbound {

/// Hermitian, positive semidefinite, unit-trace operator with its cached
/// spectrum. Only obtainable through validate_state.
class DensityMatrix {
 public:
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  const Spectrum& spectrum() const { return spectrum_; }
  std::size_t dim() const { return op_.dim(); }
  double rank_tolerance() const { return rank_tolerance_; }
  /// True when small negative eigenvalues were clamped and the state renormalized.
  bool clamped() const { return clamped_; }

 private:
  DensityMatrix(HermitianOperator op, Spectrum spectrum, double rank_tolerance, bool clamped)
      : op_(std::move(op)), spectrum_(std::move(spectrum)),
        rank_tolerance_(rank_tolerance), clamped_(clamped) {}

  friend DensityMatrix validate_state(const ComplexMatrix&, const Tolerances&);
  friend DensityMatrix validate_state(Spectrum, const Tolerances&);

  HermitianOperator op_;
  Spectrum spectrum_;
  double rank_tolerance_;
  bool clamped_;
};

DensityMatrix validate_state(const ComplexMatrix& m, const Tolerances& tol = default_tolerances());

/// State from a known eigendecomposition. The supplied eigenvalues are kept
/// as given, so tiny populations keep full relative precision (their logs are
/// exact, unlike after a fresh diagonalization).
DensityMatrix validate_state(Spectrum spectrum, const Tolerances& tol = default_tolerances());

double expectation(const HermitianOperator& h, const DensityMatrix& rho,
                   const Tolerances& tol = default_tolerances());

using RelEntropyValue = ExtendedReal;

/// S(rho||sigma) = tr(rho (ln rho - ln sigma)), evaluated in the two
/// eigenbases through the overlap matrix |<p_i|s_j>|^2. Infinite when rho
/// has weight on the kernel of sigma.
RelEntropyValue relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                 const Tolerances& tol = default_tolerances());

/// (S(rho||sigma) + S(sigma||rho)) / 2
RelEntropyValue symmetric_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                           const Tolerances& tol = default_tolerances());

/// ||rho - sigma||_1, in [0, 2].
double trace_distance_norm(const DensityMatrix& rho, const DensityMatrix& sigma,
                           const Tolerances& tol = default_tolerances());

struct PinskerRecord {
  RelEntropyValue relative_entropy;
  double trace_norm = 0.0;
  double rhs = 0.0;    // ||rho - sigma||_1^2 / 2
  double slack = 0.0;  // S - rhs; 0 when S is infinite
  bool holds = true;
  bool trivially_satisfied = false;
};

/// S(rho||sigma) >= ||rho - sigma||_1^2 / 2
PinskerRecord pinsker_check(const DensityMatrix& rho, const DensityMatrix& sigma,
                            const Tolerances& tol = default_tolerances());

}  // namespace fluxbound
