#include <doctest.h>

#include <cmath>

#include "fluxbound/flux_bounds.hpp"
#include "fluxbound/montecarlo.hpp"
#include "fluxbound/random.hpp"
#include "fluxbound/thermo.hpp"
#include "oracles.hpp"

using namespace fluxbound;

namespace {

HermitianOperator pauli_z() { return HermitianOperator::diagonal({1.0, -1.0}); }

}  // namespace

TEST_CASE("observable capacity and optimal shift") {
  const Observable z = make_observable(pauli_z());
  CHECK(z.capacity() == doctest::Approx(2.0));
  CHECK(z.lambda_star() == doctest::Approx(0.0));

  RandomStream rng = RandomStream::derive(43, 0, 0);
  const HermitianOperator h = random_hermitian(4, rng);
  const Observable theta = make_observable(h);
  const Spectrum sp = eigh(h);
  CHECK(theta.capacity() == doctest::Approx(sp.eigenvalues.back() - sp.eigenvalues.front()));
}

TEST_CASE("flux") {
  const DensityMatrix rho = validate_state(ComplexMatrix::diagonal({1.0, 0.0}));
  const DensityMatrix sigma = validate_state(ComplexMatrix::diagonal({0.0, 1.0}));
  const Observable z = make_observable(pauli_z());
  CHECK(flux(z, rho, sigma) == doctest::Approx(2.0));
  CHECK(flux(z, rho, rho) == 0.0);
  CHECK_THROWS_AS(flux(make_observable(HermitianOperator::identity(3)), rho, sigma),
                  ValidationError);

  // shift invariance of the flux and of every verdict
  for (std::uint64_t i = 0; i < 200; ++i) {
    RandomStream r = RandomStream::derive(47, 0, i);
    const std::size_t dim = 2 + i % 3;
    const Observable theta = make_observable(random_hermitian(dim, r));
    const DensityMatrix a = random_density(dim, r);
    const DensityMatrix b = random_density(dim, r);
    const double lambda = r.uniform(-5.0, 5.0);
    const Observable shifted = make_observable(theta.op().shifted(lambda));
    CHECK(std::abs(flux(theta, a, b) - flux(shifted, a, b)) <= 1e-10);
    const BoundReport r1 = evaluate_bounds(theta, a, b);
    const BoundReport r2 = evaluate_bounds(shifted, a, b);
    CHECK(std::abs(r1.flux_ratio_sq - r2.flux_ratio_sq) <= 1e-10);
    for (const auto& [name, v] : r1.verdicts) CHECK(r2.verdicts.at(name).holds == v.holds);
  }
}

TEST_CASE("optimal shift grid search") {
  RandomStream rng = RandomStream::derive(53, 0, 0);
  const Observable theta = make_observable(random_hermitian(3, rng));
  const auto grid = default_shift_grid(theta, 10000);
  const OptimalShiftRecord rec = optimal_shift_check(theta, grid);
  CHECK(rec.holds);
  CHECK(std::abs(rec.grid_minimum - rec.half_capacity) <= rec.grid_step);
  CHECK(std::abs(rec.value_at_lambda_star - rec.half_capacity) <= 1e-12);
  CHECK(std::abs(rec.grid_argmin - theta.lambda_star()) <= rec.grid_step);

  // the shifted norm against a direct scan of the known spectrum
  for (double lambda : {-2.0, 0.0, 0.3, 4.0}) {
    CHECK(schatten_norm(theta.op().shifted(lambda), SchattenOrder::infinity) ==
          doctest::Approx(oracle::shifted_operator_norm(theta.spectrum().eigenvalues, lambda))
              .epsilon(1e-12));
  }
  CHECK_THROWS_AS(default_shift_grid(theta, 1), ValidationError);
}

TEST_CASE("sign decomposition") {
  SUBCASE("shared eigenvector of equal weight") {
    RandomStream rng = RandomStream::derive(59, 0, 0);
    const ComplexMatrix u = random_unitary(3, rng);
    const DensityMatrix rho =
        validate_state(u * ComplexMatrix::diagonal({0.5, 0.3, 0.2}) * u.adjoint());
    const DensityMatrix sigma =
        validate_state(u * ComplexMatrix::diagonal({0.2, 0.3, 0.5}) * u.adjoint());
    const SignDecomposition sd = sign_decomposition(rho, sigma);
    CHECK(sd.kernel_rank == 1);
    CHECK(sd.epsilon == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(expectation(sd.epsilon_op, sigma) == doctest::Approx(sd.epsilon).epsilon(1e-10));
  }
  SUBCASE("coincident states") {
    const DensityMatrix rho = validate_state(ComplexMatrix::diagonal({0.4, 0.6}));
    CHECK_THROWS_AS(sign_decomposition(rho, rho), DegenerateInputError);
    const BoundReport rep = evaluate_bounds(make_observable(pauli_z()), rho, rho);
    CHECK(rep.coincident_states);
    CHECK(rep.epsilon == 1.0);
    CHECK(rep.all_hold());
  }
  SUBCASE("identities over random pairs in dims 2-4") {
    for (std::uint64_t i = 0; i < 1200; ++i) {
      RandomStream rng = RandomStream::derive(61, 0, i);
      const std::size_t dim = 2 + i % 3;
      const DensityMatrix rho = random_density(dim, rng);
      const DensityMatrix sigma = random_density(dim, rng);
      const SignDecomposition sd = sign_decomposition(rho, sigma);
      const double tn = trace_distance_norm(rho, sigma);
      CHECK(std::abs(expectation(sd.omega, rho) - expectation(sd.omega, sigma) - tn) <= 1e-9);
      CHECK(std::abs(expectation(sd.epsilon_op, rho) - expectation(sd.epsilon_op, sigma)) <= 1e-9);
      const ComplexMatrix id_check =
          sd.omega.matrix() * sd.omega.matrix() + sd.epsilon_op.matrix();
      CHECK((id_check - ComplexMatrix::identity(dim)).max_abs() <= 1e-9);
      CHECK(sd.epsilon >= 0.0);
      CHECK(sd.epsilon <= 1.0);
      if (dim == 2) CHECK(sd.kernel_rank == 0);
    }
  }
}

TEST_CASE("qTUR") {
  SUBCASE("saturating family") {
    for (double a : {0.1, 0.5, 2.0, 5.0, -3.0}) {
      const SaturatingPair sp = saturating_family(a);
      const QturRecord q = qtur_check(pauli_z(), sp.rho, sp.sigma);
      CHECK(q.verdict.holds);
      CHECK(std::abs(q.lhs - q.rhs) <= 1e-8);
    }
  }
  SUBCASE("random qubit pairs") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      RandomStream rng = RandomStream::derive(67, 0, i);
      const DensityMatrix rho = random_density(2, rng);
      const DensityMatrix sigma = random_density(2, rng);
      const SignDecomposition sd = sign_decomposition(rho, sigma);
      CHECK(qtur_check(sd.omega, rho, sigma).verdict.holds);
    }
  }
  SUBCASE("equal means") {
    const DensityMatrix rho = validate_state(ComplexMatrix::diagonal({0.4, 0.6}));
    CHECK_THROWS_AS(qtur_check(pauli_z(), rho, rho), DegenerateInputError);
  }
}

TEST_CASE("evaluate_bounds") {
  SUBCASE("saturating family at a = 2 makes the main bound tight") {
    const SaturatingPair sp = saturating_family(2.0);
    const BoundReport rep = evaluate_bounds(make_observable(pauli_z()), sp.rho, sp.sigma);
    CHECK(rep.all_hold());
    CHECK(std::abs(rep.flux_ratio_sq - std::pow(std::tanh(1.0), 2)) <= 1e-8);
    CHECK(std::abs(rep.flux_ratio_sq - rep.main_rhs) <= 1e-8);
    CHECK(rep.epsilon == 0.0);
  }
  SUBCASE("degenerate observable") {
    const SaturatingPair sp = saturating_family(1.0);
    const BoundReport rep =
        evaluate_bounds(make_observable(HermitianOperator::identity(2)), sp.rho, sp.sigma);
    CHECK(rep.degenerate_observable);
    CHECK(rep.flux_ratio_sq == 0.0);
    CHECK(rep.all_hold());
  }
  SUBCASE("infinite relative entropy") {
    const DensityMatrix rho = validate_state(ComplexMatrix::diagonal({1.0, 0.0}));
    const DensityMatrix sigma = validate_state(ComplexMatrix::diagonal({0.0, 1.0}));
    const BoundReport rep = evaluate_bounds(make_observable(pauli_z()), rho, sigma);
    CHECK_FALSE(rep.s_tilde.finite());
    CHECK(rep.main_rhs == 1.0);
    CHECK(rep.flux_ratio_sq == doctest::Approx(1.0));
    CHECK(rep.all_hold());
    CHECK(rep.verdicts.count(verdict_name::pinsker_forward) == 0);
  }
  SUBCASE("far from equilibrium the quadratic line is trivial but the main bound is not") {
    int seen = 0;
    for (std::uint64_t i = 0; i < 3000 && seen < 20; ++i) {
      RandomStream rng = RandomStream::derive(71, 0, i);
      const QubitTriple t = sample_qubit_triple(rng);
      const BoundReport rep = evaluate_bounds(t.theta, t.rho, t.sigma);
      if (!rep.s_tilde.finite() || rep.s_tilde.value() < 2.0) continue;
      ++seen;
      CHECK(rep.main_rhs < 1.0);
      CHECK(rep.pinsker_rhs.value() >= 1.0);
    }
    CHECK(seen > 0);
  }
  SUBCASE("chain ordering on random triples") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      RandomStream rng = RandomStream::derive(73, 0, i);
      const std::size_t dim = 2 + i % 3;
      const Observable theta = make_observable(random_hermitian(dim, rng));
      const DensityMatrix rho = random_density(dim, rng);
      const DensityMatrix sigma = random_density(dim, rng);
      const BoundReport rep = evaluate_bounds(theta, rho, sigma);
      REQUIRE(rep.s_tilde.finite());
      const double tn4 = 0.25 * rep.trace_norm * rep.trace_norm;
      CHECK(rep.all_hold());
      CHECK(std::abs(rep.flux) <= rep.capacity + 1e-9);
      CHECK(rep.flux_ratio_sq <= tn4 + 1e-9);
      CHECK(tn4 <= rep.strengthened_rhs + 1e-9);
      CHECK(rep.strengthened_rhs <= rep.main_rhs + 1e-9);
      CHECK(rep.main_rhs <= 1.0 + 1e-9);
      CHECK(rep.epsilon >= 0.0);
      CHECK(rep.epsilon <= 1.0);
    }
  }
}
