// Python bindings. Matrices cross the boundary as complex NumPy arrays;
// infinite relative entropies become float('inf').

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <string>

#include "fluxbound/montecarlo.hpp"
#include "fluxbound/verify.hpp"

namespace py = pybind11;
using namespace fluxbound;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw ValidationError("expected a square 2-d array");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  return ComplexMatrix(n, std::vector<Complex>(a.data(), a.data() + n * n));
}

CArray to_array(const ComplexMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  CArray out({n, n});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

double to_float(const ExtendedReal& x) {
  return x.finite() ? x.value() : std::numeric_limits<double>::infinity();
}

DensityMatrix state(const CArray& a) { return validate_state(to_matrix(a)); }
Observable observable(const CArray& a) { return make_observable(HermitianOperator(to_matrix(a))); }

ExtendedReal from_float(double x) {
  return std::isinf(x) && x > 0 ? ExtendedReal::infinity() : ExtendedReal(x);
}

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["flux"] = r.flux;
  d["capacity"] = r.capacity;
  d["flux_ratio_sq"] = r.flux_ratio_sq;
  d["s_forward"] = to_float(r.s_forward);
  d["s_backward"] = to_float(r.s_backward);
  d["s_tilde"] = to_float(r.s_tilde);
  d["pinsker_rhs"] = to_float(r.pinsker_rhs);
  d["main_rhs"] = r.main_rhs;
  d["strengthened_rhs"] = r.strengthened_rhs;
  d["trace_norm"] = r.trace_norm;
  d["epsilon"] = r.epsilon;
  d["degenerate_observable"] = r.degenerate_observable;
  d["coincident_states"] = r.coincident_states;
  py::dict verdicts;
  for (const auto& [name, v] : r.verdicts) verdicts[py::str(name)] = py::make_tuple(v.holds, v.slack);
  d["verdicts"] = verdicts;
  d["all_hold"] = r.all_hold();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Flux bounds from quantum relative entropy";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NumericError>(m, "NumericError", base.ptr());
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", base.ptr());

  // scalar functions
  m.def("h", &h, py::arg("x"));
  m.def("g", [](double x) { return g(x); }, py::arg("x"));
  m.def("B", [](double x) { return B(from_float(x)); }, py::arg("x"), "B(inf) = 1");
  m.def("f", [](double x) { return f(x); }, py::arg("x"));
  m.def("onsager_like", [](double r) { return to_float(onsager_like(r)); }, py::arg("r"));

  // linear algebra
  m.def("eigh", [](const CArray& a) {
    const Spectrum sp = eigh(HermitianOperator(to_matrix(a)));
    return py::make_tuple(py::array(py::cast(sp.eigenvalues)), to_array(sp.eigenvectors));
  }, py::arg("h"), "Ascending eigenvalues and column eigenvectors.");
  m.def("tensor_product", [](const CArray& a, const CArray& b) {
    return to_array(tensor_product(to_matrix(a), to_matrix(b)));
  });
  m.def("partial_trace", [](const CArray& a, std::size_t dim_s, std::size_t dim_e, const std::string& keep) {
    if (keep != "system" && keep != "environment") throw ValidationError("keep must be system or environment");
    return to_array(partial_trace(to_matrix(a), dim_s, dim_e,
                                  keep == "system" ? Subsystem::system : Subsystem::environment));
  }, py::arg("m"), py::arg("dim_s"), py::arg("dim_e"), py::arg("keep") = "system");
  m.def("schatten_norm", [](const CArray& a, double k) {
    return schatten_norm(HermitianOperator(to_matrix(a)), k);
  }, py::arg("h"), py::arg("k"));

  // states
  m.def("validate_state", [](const CArray& a) { return to_array(state(a).matrix()); },
        py::arg("rho"), "Validated (possibly clamped) copy of a density matrix.");
  m.def("relative_entropy", [](const CArray& rho, const CArray& sigma) {
    return to_float(relative_entropy(state(rho), state(sigma)));
  }, py::arg("rho"), py::arg("sigma"));
  m.def("symmetric_relative_entropy", [](const CArray& rho, const CArray& sigma) {
    return to_float(symmetric_relative_entropy(state(rho), state(sigma)));
  }, py::arg("rho"), py::arg("sigma"));
  m.def("trace_distance_norm", [](const CArray& rho, const CArray& sigma) {
    return trace_distance_norm(state(rho), state(sigma));
  }, py::arg("rho"), py::arg("sigma"));

  // bounds
  m.def("flux", [](const CArray& theta, const CArray& rho, const CArray& sigma) {
    return flux(observable(theta), state(rho), state(sigma));
  }, py::arg("theta"), py::arg("rho"), py::arg("sigma"));
  m.def("evaluate_bounds", [](const CArray& theta, const CArray& rho, const CArray& sigma) {
    return report_dict(evaluate_bounds(observable(theta), state(rho), state(sigma)));
  }, py::arg("theta"), py::arg("rho"), py::arg("sigma"));
  m.def("sign_decomposition", [](const CArray& rho, const CArray& sigma) {
    const SignDecomposition sd = sign_decomposition(state(rho), state(sigma));
    py::dict d;
    d["omega"] = to_array(sd.omega.matrix());
    d["epsilon_op"] = to_array(sd.epsilon_op.matrix());
    d["epsilon"] = sd.epsilon;
    d["kernel_rank"] = sd.kernel_rank;
    return d;
  }, py::arg("rho"), py::arg("sigma"));
  m.def("qtur", [](const CArray& omega, const CArray& rho, const CArray& sigma) {
    const QturRecord q = qtur_check(HermitianOperator(to_matrix(omega)), state(rho), state(sigma));
    return py::make_tuple(q.lhs, q.rhs);
  }, py::arg("omega"), py::arg("rho"), py::arg("sigma"),
     "(variance ratio, f(S~)); the first is never below the second.");
  m.def("optimal_shift", [](const CArray& theta, std::size_t points) {
    const Observable o = observable(theta);
    const OptimalShiftRecord r = optimal_shift_check(o, default_shift_grid(o, points));
    py::dict d;
    d["grid_minimum"] = r.grid_minimum;
    d["grid_argmin"] = r.grid_argmin;
    d["lambda_star"] = o.lambda_star();
    d["value_at_lambda_star"] = r.value_at_lambda_star;
    d["half_capacity"] = r.half_capacity;
    d["grid_step"] = r.grid_step;
    return d;
  }, py::arg("theta"), py::arg("points") = 10000);

  // scenarios
  m.def("saturating_family", [](double a) {
    const SaturatingPair p = saturating_family(a);
    return py::make_tuple(to_array(p.rho.matrix()), to_array(p.sigma.matrix()));
  }, py::arg("a"));
  m.def("thermal_state", [](const CArray& hamiltonian, double beta) {
    return to_array(thermal_environment(HermitianOperator(to_matrix(hamiltonian)), beta).matrix());
  }, py::arg("hamiltonian"), py::arg("beta"));
  m.def("spin_pair", [](std::vector<double> times, double p, double q, double omega, double coupling,
                        double omega0) {
    SpinPairParams params{p, q, omega, coupling, omega0, std::move(times)};
    py::list rows;
    for (const auto& pt : spin_pair_timeseries(params)) {
      py::dict d;
      d["t"] = pt.t;
      d["flux"] = pt.flux;
      d["flux_analytic"] = pt.flux_analytic;
      d["two_phi_sq"] = pt.two_phi_sq;
      d["onsager"] = to_float(pt.onsager);
      d["s_tilde"] = to_float(pt.s_tilde);
      d["total_energy"] = pt.total_energy;
      rows.append(d);
    }
    return rows;
  }, py::arg("times"), py::arg("p") = 0.9, py::arg("q") = 0.1, py::arg("omega") = 1.0,
     py::arg("coupling") = 2.0, py::arg("omega0") = 0.0);

  // experiments
  m.def("montecarlo", [](std::int64_t draws, std::uint64_t seed, unsigned threads, const std::string& policy) {
    DrawConfig cfg;
    cfg.n_draws = draws;
    cfg.master_seed = seed;
    cfg.threads = threads;
    cfg.rejection_policy = parse_rejection_policy(policy);
    MonteCarloResult r;
    {
      py::gil_scoped_release release;
      r = run_montecarlo(cfg);
    }
    std::vector<double> ratio, s_tilde, main_rhs, strengthened_rhs, epsilon;
    for (const auto& rec : r.records) {
      ratio.push_back(rec.flux_ratio_sq);
      s_tilde.push_back(to_float(rec.s_tilde));
      main_rhs.push_back(rec.main_rhs);
      strengthened_rhs.push_back(rec.strengthened_rhs);
      epsilon.push_back(rec.epsilon);
    }
    const auto& s = r.summary;
    py::dict summary;
    summary["draws"] = s.draws;
    summary["main_violations"] = s.main_violations;
    summary["strengthened_violations"] = s.strengthened_violations;
    summary["any_violations"] = s.any_violations;
    summary["infinite_s_tilde"] = s.infinite_s_tilde;
    summary["redraws"] = s.total_redraws;
    summary["far_from_equilibrium"] = s.far_from_equilibrium;
    summary["far_and_nontrivial"] = s.far_and_nontrivial;
    summary["min_main_slack"] = s.min_main_slack;
    py::dict d;
    d["flux_ratio_sq"] = py::array(py::cast(ratio));
    d["s_tilde"] = py::array(py::cast(s_tilde));
    d["main_rhs"] = py::array(py::cast(main_rhs));
    d["strengthened_rhs"] = py::array(py::cast(strengthened_rhs));
    d["epsilon"] = py::array(py::cast(epsilon));
    d["summary"] = summary;
    return d;
  }, py::arg("draws") = 10000, py::arg("seed") = 42, py::arg("threads") = 1,
     py::arg("policy") = "report-infinite");
  m.def("verify", [](std::uint64_t seed, std::int64_t draws, std::int64_t scenarios) {
    VerifyConfig cfg;
    cfg.master_seed = seed;
    cfg.qubit_draws = draws;
    cfg.scenario_draws = scenarios;
    py::gil_scoped_release release;
    return run_verify(cfg).to_json();
  }, py::arg("seed") = 42, py::arg("draws") = 1000, py::arg("scenarios") = 100,
     "JSON report of every property suite.");
}
