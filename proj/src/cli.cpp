#include "longwave/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "longwave/csv.hpp"
#include "longwave/error.hpp"
#include "longwave/experiments.hpp"
#include "longwave/validation.hpp"

namespace longwave::cli {

namespace {

struct CommonOptions {
  std::string model = "bbm";
  int n_modes = 128;
  std::string initial = "standard";
  double reference_divisor = 50.0;
  bool linear = false;
  std::string output;
};

void add_common(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--model", o.model, "Dispersive model")->check(CLI::IsMember({"bbm", "kdv", "whitham"}));
  cmd.add_option("--n-modes", o.n_modes, "Number of Fourier modes (even, >= 8)");
  cmd.add_option("--initial", o.initial, "Initial data")->check(CLI::IsMember({"standard", "cosine"}));
  cmd.add_option("--reference-divisor", o.reference_divisor,
                 "Reference step = smallest tau / divisor (>= 50)");
  cmd.add_flag("--linear", o.linear, "Drop the nonlinearity (g_Q = 0)");
  cmd.add_option("--output", o.output, "CSV output path (default: standard output)");
}

ExperimentPlan base_plan(const CommonOptions& o) {
  ExperimentPlan plan;
  plan.model = o.model;
  plan.n_modes = o.n_modes;
  plan.initial = parse_initial_condition(o.initial);
  plan.reference_divisor = o.reference_divisor;
  plan.linear = o.linear;
  return plan;
}

int execute(const ExperimentPlan& plan, const std::string& output, std::ostream& out,
            std::ostream& err) {
  validate_plan(plan);
  err << "[longwave] " << plan.methods.size() << " method(s) x " << plan.epsilons.size()
      << " epsilon(s) x " << plan.taus.size() << " step size(s), N = " << plan.n_modes
      << ", reference step " << plan.reference_tau() << '\n';
  const auto records = run_sweep(plan);

  std::size_t failed = 0;
  for (const auto& r : records) failed += r.status == RecordStatus::failed ? 1 : 0;

  if (output.empty()) {
    write_csv(out, records);
    write_flag_log(err, records);
  } else {
    write_csv(output, records);
    std::ostringstream flags;
    if (write_flag_log(flags, records) > 0) {
      std::ofstream log(output + ".log");
      log << flags.str();
      err << "[longwave] flagged records written to " << output << ".log\n";
    }
    err << "[longwave] wrote " << records.size() << " record(s) to " << output << '\n';
  }
  if (failed > 0) {
    err << "[longwave] " << failed << " record(s) failed\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Long-wave-limit-preserving integrators for dispersive equations", "longwave"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  // run
  CommonOptions run_opts;
  double epsilon = 0.0, tau = 0.0, t_final = 0.0;
  std::string method = "lwp1";
  auto* run = app.add_subcommand("run", "Evolve one configuration and write one record");
  add_common(*run, run_opts);
  run->add_option("--epsilon", epsilon, "Long-wave parameter in (0, 1]")->required();
  run->add_option("--tau", tau, "Time step")->required();
  auto* run_t_final = run->add_option("--t-final", t_final, "Final time (default 1/epsilon)");
  run->add_option("--method", method, "lwp1, lwp2, lawson_euler or lawson_rk4");

  // sweep
  CommonOptions sweep_opts;
  std::vector<double> epsilons, taus;
  std::vector<std::string> methods{"lwp1"};
  std::string rule = "inverse-epsilon";
  double sweep_t_final = 1.0;
  int jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "Run an error-vs-step-size study");
  add_common(*sweep, sweep_opts);
  sweep->add_option("--epsilons", epsilons, "Comma-separated epsilon values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--taus", taus, "Comma-separated step sizes")->required()->delimiter(',');
  sweep->add_option("--methods", methods, "Comma-separated methods")->delimiter(',');
  sweep->add_option("--t-final-rule", rule, "Horizon: inverse-epsilon (T = 1/eps) or fixed")
      ->check(CLI::IsMember({"inverse-epsilon", "fixed"}));
  sweep->add_option("--t-final", sweep_t_final, "Final time for --t-final-rule fixed");
  sweep->add_option("--jobs", jobs, "Worker threads");

  auto* validate = app.add_subcommand("validate", "Run the oracle and invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto* sub : app.get_subcommands()) err << sub->help();
    if (app.get_subcommands().empty()) err << app.help();
    return kExitUsage;
  }

  try {
    if (run->parsed()) {
      ExperimentPlan plan = base_plan(run_opts);
      plan.epsilons = {epsilon};
      plan.taus = {tau};
      plan.methods = {parse_method(method)};
      if (run_t_final->count() > 0) {
        plan.t_final_rule = TFinalRule::fixed;
        plan.t_final = t_final;
      }
      return execute(plan, run_opts.output, out, err);
    }
    if (sweep->parsed()) {
      ExperimentPlan plan = base_plan(sweep_opts);
      plan.epsilons = epsilons;
      plan.taus = taus;
      plan.methods.clear();
      for (const auto& m : methods) plan.methods.push_back(parse_method(m));
      plan.t_final_rule = rule == "fixed" ? TFinalRule::fixed : TFinalRule::inverse_epsilon;
      plan.t_final = sweep_t_final;
      plan.jobs = jobs;
      return execute(plan, sweep_opts.output, out, err);
    }
    if (validate->parsed()) {
      return report_checks(out, run_validation_suite()) ? kExitOk : kExitNumerical;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"longwave"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_and_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace longwave::cli
