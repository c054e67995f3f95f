#include "fluxbound/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace fluxbound {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw ValidationError("matrix is not square: " + std::to_string(data_.size()) +
                          " entries for dimension " + std::to_string(dim_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw ValidationError("matrix is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw ValidationError("dimension mismatch in matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw ValidationError("dimension mismatch in matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("dimension mismatch in matrix product");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
  double d = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.dim() == 0) throw ValidationError("operator dimension must be at least 1");
  const double defect = hermiticity_defect(m);
  if (!(defect <= tol.hermiticity)) {
    throw ValidationError("matrix is not Hermitian: defect " + std::to_string(defect));
  }
  m_ = ComplexMatrix(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    m_(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m_(i, j) = avg;
      m_(j, i) = std::conj(avg);
    }
  }
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  return HermitianOperator(ComplexMatrix::identity(dim), Unchecked{});
}

HermitianOperator HermitianOperator::diagonal(const std::vector<double>& diag) {
  return HermitianOperator(ComplexMatrix::diagonal(diag));
}

HermitianOperator HermitianOperator::shifted(double lambda) const {
  ComplexMatrix m = m_;
  for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) -= lambda;
  return HermitianOperator(std::move(m), Unchecked{});
}

ComplexMatrix Spectrum::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += eigenvectors(i, k) * eigenvalues[k] * std::conj(eigenvectors(j, k));
      out(i, j) = s;
    }
  return out;
}

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p,q) with J = D R, D = diag over (p,q) of (1, e^{-i phi})
// and R the real Jacobi rotation; a <- J^dag a J, v <- v J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // J restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
}

}  // namespace

Spectrum eigh(const HermitianOperator& h, const Tolerances& tol) {
  const std::size_t n = h.dim();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = tol.jacobi_relative * a.frobenius();
  bool converged = off_diagonal_mass(a) <= threshold;
  for (int sweep = 0; sweep < tol.jacobi_max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = off_diagonal_mass(a) <= threshold;
  }
  if (!converged) {
    throw NumericError("Jacobi eigensolver did not converge in " +
                       std::to_string(tol.jacobi_max_sweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  Spectrum out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix matrix_function(const Spectrum& spectrum, const ScalarMap& f) {
  const std::size_t n = spectrum.eigenvalues.size();
  std::vector<Complex> fl(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = spectrum.eigenvalues[k];
    fl[k] = f(lambda);
    if (!std::isfinite(fl[k].real()) || !std::isfinite(fl[k].imag())) {
      throw DomainError("matrix function undefined at eigenvalue " + std::to_string(lambda),
                        lambda);
    }
  }
  const ComplexMatrix& vecs = spectrum.eigenvectors;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += vecs(i, k) * fl[k] * std::conj(vecs(j, k));
      out(i, j) = s;
    }
  return out;
}

ComplexMatrix matrix_function(const HermitianOperator& h, const ScalarMap& f,
                              const Tolerances& tol) {
  return matrix_function(eigh(h, tol), f);
}

ComplexMatrix unitary_from_generator(const HermitianOperator& generator, double t,
                                     const Tolerances& tol) {
  return matrix_function(generator, [t](double lambda) {
    return std::exp(Complex(0.0, -lambda * t));
  }, tol);
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_s, std::size_t dim_e,
                            Subsystem keep) {
  if (dim_s == 0 || dim_e == 0 || m.dim() != dim_s * dim_e) {
    throw ValidationError("partial trace: matrix dimension " + std::to_string(m.dim()) +
                          " != " + std::to_string(dim_s) + " x " + std::to_string(dim_e));
  }
  if (keep == Subsystem::system) {
    ComplexMatrix out(dim_s);
    for (std::size_t i = 0; i < dim_s; ++i)
      for (std::size_t j = 0; j < dim_s; ++j)
        for (std::size_t k = 0; k < dim_e; ++k) out(i, j) += m(i * dim_e + k, j * dim_e + k);
    return out;
  }
  ComplexMatrix out(dim_e);
  for (std::size_t k = 0; k < dim_e; ++k)
    for (std::size_t l = 0; l < dim_e; ++l)
      for (std::size_t i = 0; i < dim_s; ++i) out(k, l) += m(i * dim_e + k, i * dim_e + l);
  return out;
}

double schatten_norm(const HermitianOperator& h, SchattenOrder k, const Tolerances& tol) {
  const Spectrum sp = eigh(h, tol);
  double acc = 0.0;
  switch (k) {
    case SchattenOrder::one:
      for (double l : sp.eigenvalues) acc += std::abs(l);
      return acc;
    case SchattenOrder::two:
      for (double l : sp.eigenvalues) acc += l * l;
      return std::sqrt(acc);
    case SchattenOrder::infinity:
      return std::max(std::abs(sp.eigenvalues.front()), std::abs(sp.eigenvalues.back()));
  }
  throw ValidationError("unsupported Schatten order");
}

double schatten_norm(const HermitianOperator& h, double k, const Tolerances& tol) {
  if (k == 1.0) return schatten_norm(h, SchattenOrder::one, tol);
  if (k == 2.0) return schatten_norm(h, SchattenOrder::two, tol);
  if (k == std::numeric_limits<double>::infinity()) {
    return schatten_norm(h, SchattenOrder::infinity, tol);
  }
  throw ValidationError("unsupported Schatten order " + std::to_string(k) +
                        " (supported: 1, 2, inf)");
}

double expectation(const HermitianOperator& h, const ComplexMatrix& state, const Tolerances& tol) {
  if (h.dim() != state.dim()) {
    throw ValidationError("expectation: dimension mismatch " + std::to_string(h.dim()) +
                          " vs " + std::to_string(state.dim()));
  }
  const ComplexMatrix& m = h.matrix();
  Complex s = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * state(j, i);
  if (std::abs(s.imag()) > tol.imaginary) {
    throw ValidationError("expectation has imaginary part " + std::to_string(s.imag()));
  }
  return s.real();
}

double unitarity_defect(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::identity(u.dim())).max_abs();
}

}  // namespace fluxbound
