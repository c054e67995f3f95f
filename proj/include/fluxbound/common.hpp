#pragma once

#include <stdexcept>
#include <string>

namespace fluxbound {

/// Numerical thresholds shared by every module. One record so that
/// acceptance sweeps can adjust all of them from a single place.
struct Tolerances {
  double hermiticity = 1e-12;         // max |M_ij - conj(M_ji)|
  double jacobi_relative = 1e-14;     // off-diagonal Frobenius mass / ||H||_F
  int jacobi_max_sweeps = 100;
  double negative_eigenvalue = 1e-10; // eigenvalues in [-this, 0) are clamped
  double trace = 1e-10;               // |tr(rho) - 1|
  double rank = 1e-12;                // eigenvalues at or below are exact zeros
  double imaginary = 1e-10;           // allowed imaginary part of tr(H rho)
  double unitarity = 1e-10;           // ||U^dag U - I||_max
  double sign_zero_relative = 1e-12;  // |w_k| threshold, scaled by max(1, ||rho - sigma||_inf)
  double slack = 1e-9;                // inequality verdict slack
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural invariant (shape, Hermiticity, trace, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A scalar or matrix function was evaluated outside its domain.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double offending)
      : Error(what), offending_(offending) {}
  explicit DomainError(const std::string& what) : Error(what) {}

  double offending() const { return offending_; }

 private:
  double offending_ = 0.0;
};

/// Iterative routine failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Inputs coincide where the operation needs them to differ.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Nonnegative real or a tagged +infinity. The infinite case never carries
/// a floating-point infinity into arithmetic.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : value_(v), finite_(true) {}

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.finite_ = false;
    return r;
  }

  constexpr bool finite() const { return finite_; }

  /// Throws when infinite; callers must branch on finite() first.
  double value() const {
    if (!finite_) throw DomainError("value() requested from an infinite ExtendedReal");
    return value_;
  }

  double value_or(double fallback) const { return finite_ ? value_ : fallback; }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

 private:
  double value_ = 0.0;
  bool finite_ = true;
};

}  // namespace fluxbound
