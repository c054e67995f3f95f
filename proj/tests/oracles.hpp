#pragma once

// Test-only reference computations. None of these call the eigensolver or
// the root finder under test.

#include <cmath>
#include <complex>
#include <vector>

#include "fluxbound/hermitian.hpp"

namespace oracle {

using fluxbound::Complex;
using fluxbound::ComplexMatrix;

/// Eigenvalues of a 2x2 Hermitian matrix, ascending, from the characteristic polynomial.
inline std::vector<double> qubit_eigenvalues(const ComplexMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
  return {mean - rad, mean + rad};
}

/// tr(rho ln sigma) for qubit states through the Bloch form
/// ln sigma = c0 I + c1 (n . pauli), computed without diagonalization.
inline double qubit_cross_log(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  // Bloch vectors
  auto bloch = [](const ComplexMatrix& m) {
    return std::vector<double>{2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(),
                               (m(0, 0) - m(1, 1)).real()};
  };
  const auto r = bloch(rho);
  const auto s = bloch(sigma);
  const double s_len = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
  const double lp = std::log(0.5 * (1.0 + s_len));
  const double lm = std::log(0.5 * (1.0 - s_len));
  const double c0 = 0.5 * (lp + lm);
  const double c1 = 0.5 * (lp - lm);
  if (s_len == 0.0) return c0;
  const double dot = (r[0] * s[0] + r[1] * s[1] + r[2] * s[2]) / s_len;
  return c0 + c1 * dot;
}

inline double qubit_relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  return qubit_cross_log(rho, rho) - qubit_cross_log(rho, sigma);
}

/// Kullback-Leibler divergence of two probability vectors.
inline double kl(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) s += p[i] * std::log(p[i] / q[i]);
  return s;
}

/// Partial trace as explicit sandwich <i,k| M |j,k> with product basis vectors.
inline ComplexMatrix partial_trace_bruteforce(const ComplexMatrix& m, std::size_t ds,
                                              std::size_t de, bool keep_system) {
  const std::size_t n = ds * de;
  auto basis = [&](std::size_t a, std::size_t b) {
    std::vector<Complex> v(n);
    v[a * de + b] = 1.0;
    return v;
  };
  auto sandwich = [&](const std::vector<Complex>& bra, const std::vector<Complex>& ket) {
    Complex s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s += std::conj(bra[r]) * m(r, c) * ket[c];
    return s;
  };
  const std::size_t keep = keep_system ? ds : de;
  const std::size_t traced = keep_system ? de : ds;
  ComplexMatrix out(keep);
  for (std::size_t i = 0; i < keep; ++i)
    for (std::size_t j = 0; j < keep; ++j)
      for (std::size_t k = 0; k < traced; ++k) {
        out(i, j) += keep_system ? sandwich(basis(i, k), basis(j, k))
                                 : sandwich(basis(k, i), basis(k, j));
      }
  return out;
}

/// Pure bisection inverse of y -> y tanh(y/2).
inline double g_bisection(double x) {
  double lo = 0.0, hi = x + 2.0;
  while (hi * std::tanh(0.5 * hi) < x) hi *= 2.0;
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::tanh(0.5 * mid) < x) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// max |theta_n - lambda| by direct scan over a known spectrum.
inline double shifted_operator_norm(const std::vector<double>& spectrum, double lambda) {
  double m = 0.0;
  for (double t : spectrum) m = std::max(m, std::abs(t - lambda));
  return m;
}

}  // namespace oracle
