#include "fluxbound/random.hpp"

#include <cmath>
#include <numbers>

namespace fluxbound {

double RandomStream::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

HermitianOperator random_hermitian(std::size_t dim, RandomStream& rng, double scale) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = scale * rng.normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex z(scale * rng.normal() / std::numbers::sqrt2,
                      scale * rng.normal() / std::numbers::sqrt2);
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return HermitianOperator(m);
}

DensityMatrix random_density(std::size_t dim, RandomStream& rng, const Tolerances& tol) {
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return validate_state(rho, tol);
}

ComplexMatrix random_unitary(std::size_t dim, RandomStream& rng, const Tolerances& tol) {
  return unitary_from_generator(random_hermitian(dim, rng, std::numbers::pi), 1.0, tol);
}

}  // namespace fluxbound
