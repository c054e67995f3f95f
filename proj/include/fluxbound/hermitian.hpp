#pragma once

// Dense complex linear algebra for small Hilbert spaces (dim <= 16).

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "fluxbound/common.hpp"

namespace fluxbound {

using Complex = std::complex<double>;

/// Square, row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<double>& diag);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  const std::vector<Complex>& entries() const { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// max_ij |M_ij|
  double max_abs() const;
  double frobenius() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// max_ij |M_ij - conj(M_ji)|
double hermiticity_defect(const ComplexMatrix& m);

/// ComplexMatrix checked to be Hermitian. Construction from a matrix whose
/// defect exceeds the tolerance throws ValidationError; the stored matrix is
/// exactly symmetrized.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m,
                             const Tolerances& tol = default_tolerances());

  static HermitianOperator identity(std::size_t dim);
  static HermitianOperator diagonal(const std::vector<double>& diag);

  std::size_t dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }

  /// H - lambda * I
  HermitianOperator shifted(double lambda) const;

 private:
  struct Unchecked {};
  HermitianOperator(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k belongs to eigenvalues[k]

  /// V diag(lambda) V^dag
  ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Deterministic for identical input; equal
/// eigenvalues keep solver order.
Spectrum eigh(const HermitianOperator& h, const Tolerances& tol = default_tolerances());

using ScalarMap = std::function<Complex(double)>;

/// V diag(f(lambda)) V^dag. A non-finite f(lambda) raises DomainError carrying
/// the eigenvalue.
ComplexMatrix matrix_function(const Spectrum& spectrum, const ScalarMap& f);
ComplexMatrix matrix_function(const HermitianOperator& h, const ScalarMap& f,
                              const Tolerances& tol = default_tolerances());

/// exp(-i G t)
ComplexMatrix unitary_from_generator(const HermitianOperator& generator, double t,
                                     const Tolerances& tol = default_tolerances());

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { system, environment };

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_s, std::size_t dim_e,
                            Subsystem keep);

enum class SchattenOrder { one, two, infinity };

double schatten_norm(const HermitianOperator& h, SchattenOrder k,
                     const Tolerances& tol = default_tolerances());
/// Numeric order: 1, 2 or +infinity; anything else raises ValidationError.
double schatten_norm(const HermitianOperator& h, double k,
                     const Tolerances& tol = default_tolerances());

/// Re tr(H state). Imaginary residue above tolerance raises ValidationError.
double expectation(const HermitianOperator& h, const ComplexMatrix& state,
                   const Tolerances& tol = default_tolerances());

/// max_ij |(U^dag U - I)_ij|
double unitarity_defect(const ComplexMatrix& u);

}  // namespace fluxbound
