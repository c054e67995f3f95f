#include <doctest.h>

#include <cmath>
#include <limits>

#include "fluxbound/hermitian.hpp"
#include "fluxbound/random.hpp"
#include "oracles.hpp"

using namespace fluxbound;

namespace {

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("eigh of identity and Pauli-x") {
  const Spectrum id = eigh(HermitianOperator::identity(2));
  CHECK(id.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(id.eigenvalues[1] == doctest::Approx(1.0));

  const Spectrum px = eigh(HermitianOperator(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}));
  CHECK(px.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(px.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigh matches the qubit characteristic polynomial") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    RandomStream rng = RandomStream::derive(7, 0, i);
    const HermitianOperator h = random_hermitian(2, rng, 3.0);
    const Spectrum sp = eigh(h);
    const auto expected = oracle::qubit_eigenvalues(h.matrix());
    CHECK(std::abs(sp.eigenvalues[0] - expected[0]) <= 1e-12);
    CHECK(std::abs(sp.eigenvalues[1] - expected[1]) <= 1e-12);
  }
}

TEST_CASE("eigh reconstruction and unitarity over dims 2..16") {
  double worst_rec = 0.0, worst_unit = 0.0;
  for (std::uint64_t i = 0; i < 1500; ++i) {
    RandomStream rng = RandomStream::derive(11, 0, i);
    const std::size_t dim = 2 + static_cast<std::size_t>(i % 15);
    const HermitianOperator h = random_hermitian(dim, rng);
    const Spectrum sp = eigh(h);
    worst_rec = std::max(worst_rec, max_diff(sp.reconstruct(), h.matrix()));
    worst_unit = std::max(worst_unit, unitarity_defect(sp.eigenvectors));
    for (std::size_t k = 1; k < dim; ++k) REQUIRE(sp.eigenvalues[k - 1] <= sp.eigenvalues[k]);
  }
  CHECK(worst_rec <= 1e-10);
  CHECK(worst_unit <= 1e-10);
}

TEST_CASE("eigh is deterministic and handles degenerate spectra") {
  RandomStream rng = RandomStream::derive(3, 0, 0);
  const HermitianOperator h = random_hermitian(5, rng);
  const Spectrum a = eigh(h);
  const Spectrum b = eigh(h);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors.entries() == b.eigenvectors.entries());

  // U diag(1,1,2,2) U^dag: eigenvectors are basis-dependent, the projector onto
  // each eigenspace is not.
  const ComplexMatrix u = random_unitary(4, rng);
  const ComplexMatrix m = u * ComplexMatrix::diagonal({1, 1, 2, 2}) * u.adjoint();
  const Spectrum sp = eigh(HermitianOperator(m, {.hermiticity = 1e-10}));
  CHECK(sp.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(sp.eigenvalues[3] == doctest::Approx(2.0));
  CHECK(max_diff(sp.reconstruct(), m) <= 1e-10);
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), ValidationError);
  CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), ValidationError);
  CHECK_THROWS_AS(HermitianOperator(ComplexMatrix{{0.0, 1.0}, {2.0, 0.0}}), ValidationError);
  CHECK_THROWS_AS(HermitianOperator(ComplexMatrix{{Complex(1.0, 1e-6)}}), ValidationError);
}

TEST_CASE("matrix_function") {
  SUBCASE("exp on a diagonal") {
    const ComplexMatrix e = matrix_function(HermitianOperator::diagonal({0.0, std::log(2.0)}),
                                            [](double l) { return Complex(std::exp(l)); });
    CHECK(max_diff(e, ComplexMatrix::diagonal({1.0, 2.0})) <= 1e-14);
  }
  SUBCASE("log then exp round-trip on a full-rank state") {
    RandomStream rng = RandomStream::derive(5, 0, 0);
    const DensityMatrix rho = random_density(4, rng);
    const ComplexMatrix log_rho =
        matrix_function(rho.op(), [](double l) { return Complex(std::log(l)); });
    const ComplexMatrix back = matrix_function(HermitianOperator(log_rho, {.hermiticity = 1e-10}),
                                               [](double l) { return Complex(std::exp(l)); });
    CHECK(max_diff(back, rho.matrix()) <= 1e-10);
  }
  SUBCASE("identity map returns the input") {
    RandomStream rng = RandomStream::derive(5, 0, 1);
    const HermitianOperator h = random_hermitian(6, rng);
    CHECK(max_diff(matrix_function(h, [](double l) { return Complex(l); }), h.matrix()) <= 1e-12);
  }
  SUBCASE("unitary from a generator") {
    RandomStream rng = RandomStream::derive(5, 0, 2);
    const ComplexMatrix u = unitary_from_generator(random_hermitian(4, rng), 0.7);
    CHECK(unitarity_defect(u) <= 1e-10);
  }
  SUBCASE("undefined value carries the eigenvalue") {
    try {
      matrix_function(HermitianOperator::diagonal({0.0, 0.5}),
                      [](double l) { return Complex(std::log(l)); });
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(e.offending() == 0.0);
    }
  }
}

TEST_CASE("tensor_product") {
  CHECK(max_diff(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                 ComplexMatrix::identity(4)) == 0.0);
  CHECK(max_diff(tensor_product(ComplexMatrix::diagonal({2, 3}), ComplexMatrix::diagonal({5, 7})),
                 ComplexMatrix::diagonal({10, 14, 15, 21})) == 0.0);
  for (std::uint64_t i = 0; i < 50; ++i) {
    RandomStream rng = RandomStream::derive(13, 0, i);
    const HermitianOperator a = random_hermitian(2 + i % 3, rng);
    const HermitianOperator b = random_hermitian(2 + i % 2, rng);
    const Complex lhs = tensor_product(a.matrix(), b.matrix()).trace();
    const Complex rhs = a.matrix().trace() * b.matrix().trace();
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("partial_trace") {
  RandomStream rng = RandomStream::derive(17, 0, 0);
  const DensityMatrix rs = random_density(2, rng);
  const DensityMatrix re = random_density(3, rng);
  const ComplexMatrix prod = tensor_product(rs.matrix(), re.matrix());
  CHECK(max_diff(partial_trace(prod, 2, 3, Subsystem::system), rs.matrix()) <= 1e-12);
  CHECK(max_diff(partial_trace(prod, 2, 3, Subsystem::environment), re.matrix()) <= 1e-12);

  ComplexMatrix mixed = ComplexMatrix::identity(4);
  mixed *= 0.25;
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= 0.5;
  CHECK(max_diff(partial_trace(mixed, 2, 2, Subsystem::system), half) <= 1e-15);

  // general (non-product) dim-6 input against explicit sandwiching
  const HermitianOperator m = random_hermitian(6, rng);
  CHECK(max_diff(partial_trace(m.matrix(), 2, 3, Subsystem::system),
                 oracle::partial_trace_bruteforce(m.matrix(), 2, 3, true)) <= 1e-12);
  CHECK(max_diff(partial_trace(m.matrix(), 2, 3, Subsystem::environment),
                 oracle::partial_trace_bruteforce(m.matrix(), 2, 3, false)) <= 1e-12);
  CHECK(std::abs(partial_trace(m.matrix(), 2, 3, Subsystem::system).trace() - m.matrix().trace()) <=
        1e-12);

  // A (x) B -> A tr(B)
  const HermitianOperator a = random_hermitian(3, rng);
  const HermitianOperator b = random_hermitian(2, rng);
  CHECK(max_diff(partial_trace(tensor_product(a.matrix(), b.matrix()), 3, 2, Subsystem::system),
                 a.matrix() * b.matrix().trace()) <= 1e-12);

  CHECK_THROWS_AS(partial_trace(m.matrix(), 2, 2, Subsystem::system), ValidationError);
}

TEST_CASE("schatten_norm") {
  const HermitianOperator z = HermitianOperator::diagonal({1.0, -1.0});
  CHECK(schatten_norm(z, 1.0) == doctest::Approx(2.0));
  CHECK(schatten_norm(z, 2.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(schatten_norm(z, std::numeric_limits<double>::infinity()) == doctest::Approx(1.0));
  CHECK(schatten_norm(HermitianOperator::diagonal({0.0, 0.0}), SchattenOrder::one) == 0.0);
  CHECK_THROWS_AS(schatten_norm(z, 3.0), ValidationError);

  for (std::uint64_t i = 0; i < 300; ++i) {
    RandomStream rng = RandomStream::derive(19, 0, i);
    const std::size_t dim = 1 + i % 6;
    const HermitianOperator a = random_hermitian(dim, rng);
    const HermitianOperator b = random_hermitian(dim, rng);
    const double n1 = schatten_norm(a, SchattenOrder::one);
    const double n2 = schatten_norm(a, SchattenOrder::two);
    const double ninf = schatten_norm(a, SchattenOrder::infinity);
    CHECK(n1 >= n2 - 1e-12);
    CHECK(n2 >= ninf - 1e-12);
    CHECK(n2 == doctest::Approx(a.matrix().frobenius()).epsilon(1e-12));
    // Hoelder
    const double tr_ab = std::abs((a.matrix() * b.matrix()).trace());
    CHECK(tr_ab <= n1 * schatten_norm(b, SchattenOrder::infinity) + 1e-12);
  }
}

TEST_CASE("expectation") {
  CHECK(expectation(HermitianOperator::identity(2), ComplexMatrix::diagonal({0.3, 0.7})) ==
        doctest::Approx(1.0));
  const double p = 0.3;
  CHECK(expectation(HermitianOperator::diagonal({1.0, -1.0}), ComplexMatrix::diagonal({p, 1 - p})) ==
        doctest::Approx(2 * p - 1));

  RandomStream rng = RandomStream::derive(23, 0, 0);
  const HermitianOperator h = random_hermitian(4, rng);
  const DensityMatrix rho = random_density(4, rng);
  Complex direct = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) direct += h.matrix()(i, j) * rho.matrix()(j, i);
  CHECK(expectation(h, rho.matrix()) == doctest::Approx(direct.real()).epsilon(1e-14));

  CHECK_THROWS_AS(expectation(h, ComplexMatrix::identity(2)), ValidationError);
  ComplexMatrix non_herm{{0.0, 1.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(expectation(HermitianOperator(ComplexMatrix{{0.0, Complex(0, 1)}, {Complex(0, -1), 0.0}}),
                              non_herm),
                  ValidationError);
}
