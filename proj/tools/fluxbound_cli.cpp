// fluxbound command line: montecarlo, spinpair, saturation, verify.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fluxbound/montecarlo.hpp"
#include "fluxbound/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

struct CommonOptions {
  std::uint64_t seed = 42;
  std::string out;  // empty: stdout
  std::string format = "csv";
  double tolerance = 1e-9;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
  cmd->add_option("--out", o.out, "output path (default: stdout)");
  cmd->add_option("--format", o.format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  cmd->add_option("--tolerance", o.tolerance, "inequality slack")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker threads; output does not depend on it")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
}

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The payload is rendered in full before the output file is opened.
void emit(const CommonOptions& o, const std::string& payload) {
  if (o.out.empty()) {
    std::cout << payload;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open output file: " + o.out);
  f << payload;
  f.close();
  if (!f) throw IoError("failed writing output file: " + o.out);
}

std::string render(const fluxbound::Table& table, const std::string& format) {
  std::ostringstream os;
  fluxbound::write_table(os, table, fluxbound::parse_output_format(format));
  return os.str();
}

fluxbound::Tolerances tolerances_from(const CommonOptions& o) {
  fluxbound::Tolerances tol;
  tol.slack = o.tolerance;
  return tol;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flux bounds from quantum relative entropy: simulations and checks"};
  app.require_subcommand(1);

  CommonOptions mc_opts;
  std::int64_t draws = 10000;
  std::string policy = "report-infinite";
  auto* mc = app.add_subcommand("montecarlo", "random-qubit flux experiment");
  add_common(mc, mc_opts);
  mc->add_option("--draws", draws, "number of draws")->check(CLI::PositiveNumber)->capture_default_str();
  mc->add_option("--policy", policy, "handling of infinite S~")
      ->check(CLI::IsMember({"redraw", "report-infinite"}))
      ->capture_default_str();

  CommonOptions sp_opts;
  fluxbound::SpinPairParams sp_params;
  double t_max = 1.5;
  std::size_t t_steps = 301;
  auto* sp = app.add_subcommand("spinpair", "two interacting spins, local energy flux");
  add_common(sp, sp_opts);
  sp->add_option("--p", sp_params.p, "system excited population")->capture_default_str();
  sp->add_option("--q", sp_params.q, "environment excited population")->capture_default_str();
  sp->add_option("--omega", sp_params.omega, "level splitting")->capture_default_str();
  sp->add_option("--g", sp_params.coupling, "coupling strength")->capture_default_str();
  sp->add_option("--omega0", sp_params.omega0, "exchange phase")->capture_default_str();
  sp->add_option("--t-max", t_max, "final time")->capture_default_str();
  sp->add_option("--t-steps", t_steps, "number of time points")->capture_default_str();

  CommonOptions sat_opts;
  double a_min = 0.0, a_max = 10.0;
  std::size_t a_steps = 101;
  auto* sat = app.add_subcommand("saturation", "saturating two-level family");
  add_common(sat, sat_opts);
  sat->add_option("--a-min", a_min)->capture_default_str();
  sat->add_option("--a-max", a_max)->capture_default_str();
  sat->add_option("--a-steps", a_steps)->capture_default_str();

  CommonOptions ver_opts;
  fluxbound::VerifyConfig ver_cfg;
  auto* ver = app.add_subcommand("verify", "run every property suite");
  add_common(ver, ver_opts);
  ver->add_option("--draws", ver_cfg.qubit_draws, "random qubit draws per suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ver->add_option("--scenarios", ver_cfg.scenario_draws, "random system/environment scenarios")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mc) {
      fluxbound::DrawConfig cfg;
      cfg.n_draws = draws;
      cfg.master_seed = mc_opts.seed;
      cfg.rejection_policy = fluxbound::parse_rejection_policy(policy);
      cfg.threads = mc_opts.threads;
      cfg.tolerances = tolerances_from(mc_opts);
      const auto result = fluxbound::run_montecarlo(cfg);
      emit(mc_opts, render(fluxbound::montecarlo_table(result), mc_opts.format));
      const auto& s = result.summary;
      std::cerr << "{\"draws\":" << s.draws << ",\"main_violations\":" << s.main_violations
                << ",\"strengthened_violations\":" << s.strengthened_violations
                << ",\"any_violations\":" << s.any_violations
                << ",\"far_from_equilibrium\":" << s.far_from_equilibrium
                << ",\"far_and_nontrivial\":" << s.far_and_nontrivial
                << ",\"infinite_s_tilde\":" << s.infinite_s_tilde
                << ",\"redraws\":" << s.total_redraws
                << ",\"min_main_slack\":" << fluxbound::format_real(s.min_main_slack) << "}\n";
      if (s.total_redraws > 0) std::cerr << "warning: " << s.total_redraws << " redraws\n";
      return s.main_violations + s.strengthened_violations == 0 ? kExitOk : kExitVerification;
    }
    if (*sp) {
      sp_params.times = fluxbound::uniform_times(t_max, t_steps);
      const auto points =
          fluxbound::spin_pair_timeseries(sp_params, tolerances_from(sp_opts));
      emit(sp_opts, render(fluxbound::spinpair_table(points), sp_opts.format));
      return kExitOk;
    }
    if (*sat) {
      const auto rows = fluxbound::run_saturation(fluxbound::uniform_grid(a_min, a_max, a_steps),
                                                  tolerances_from(sat_opts));
      emit(sat_opts, render(fluxbound::saturation_table(rows), sat_opts.format));
      return kExitOk;
    }
    if (*ver) {
      ver_cfg.master_seed = ver_opts.seed;
      ver_cfg.tolerances = tolerances_from(ver_opts);
      const auto report = fluxbound::run_verify(ver_cfg);
      emit(ver_opts, ver_opts.format == "jsonl" ? report.to_json() + "\n"
                                                : render(report.to_table(), "csv"));
      if (!report.passed()) {
        for (const auto& s : report.suites) {
          if (s.violations == 0) continue;
          std::cerr << "FAILED " << s.name << ": " << s.violations << " violations, seed "
                    << s.first_violation->seed << " draw " << s.first_violation->draw << "\n";
        }
        return kExitVerification;
      }
      return kExitOk;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fluxbound::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
