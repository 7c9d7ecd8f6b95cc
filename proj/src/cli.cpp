#include "fracrsv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>

#include "fracrsv/csv.hpp"
#include "fracrsv/error.hpp"
#include "fracrsv/run_config.hpp"
#include "fracrsv/scenarios.hpp"

namespace fracrsv {

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

bool is_usage_error(ErrorKind k) {
  return k == ErrorKind::InvalidOrder || k == ErrorKind::InvalidGrid || k == ErrorKind::InvalidArgument ||
         k == ErrorKind::ParseError;
}

// Pulls `--config PATH` / `--config=PATH` out of the argument list.
std::optional<std::string> take_config_path(std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw Error(ErrorKind::ParseError, "--config needs a file path");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return path;
}

// File entries become ordinary flags placed right after the subcommand, so
// anything given on the command line later wins.
void inject_config(std::vector<std::string>& args, const std::map<std::string, std::string>& entries) {
  static const std::vector<std::string> subcommands{"simulate", "compare", "focp", "equilibrium"};
  const auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) {
    return std::find(subcommands.begin(), subcommands.end(), a) != subcommands.end();
  });
  if (sub == args.end()) return;

  std::vector<std::string> tokens;
  for (const auto& [key, value] : entries) {
    std::string flag = key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    tokens.push_back("--" + flag);
    tokens.push_back(value);
  }
  args.insert(sub + 1, tokens.begin(), tokens.end());
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& method) {
  sub->add_option("--method", method, "Integrator: euler or pece")->check(CLI::IsMember({"euler", "pece"}));
  sub->add_option("--alpha", cfg.alpha, "Derivative order in (0, 1]");
  sub->add_option("--n", cfg.n_points, "Number of grid nodes");
  sub->add_option("--tfinal", cfg.t_final, "Final time in years");
  sub->add_option("--preset", cfg.preset, "Parameter preset name");
  sub->add_option("--out", cfg.output_dir, "Output directory");
}

void print_state(std::ostream& out, const SeirsState& s) {
  out << "S = " << format_value(s.S) << '\n'
      << "E = " << format_value(s.E) << '\n'
      << "I = " << format_value(s.I) << '\n'
      << "R = " << format_value(s.R) << '\n';
}

}  // namespace

int cli_main(const std::vector<std::string>& input, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = input;
  RunConfig cfg;
  SweepConfig sweep;
  std::string method = "pece";

  CLI::App app{"Fractional SEIRS-alpha RSV solver and optimal treatment sweep", "fracrsv"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  app.add_option("--config", "Flat key = value file supplying any flag (flags take precedence)");

  auto* simulate = app.add_subcommand("simulate", "Solve the model and write the trajectory CSV");
  add_common(simulate, cfg, method);

  auto* compare = app.add_subcommand("compare", "Norm tables of Euler and PECE against a refined PECE reference");
  add_common(compare, cfg, method);
  compare->add_option("--refine", cfg.refine, "Reference grid refinement factor");

  auto* focp = app.add_subcommand("focp", "Optimal treatment by forward-backward sweep");
  add_common(focp, cfg, method);
  focp->add_option("--k1", sweep.k1, "Weight on infectious fraction");
  focp->add_option("--k2", sweep.k2, "Weight on squared treatment");
  focp->add_option("--tmax", sweep.t_max_control, "Upper bound on treatment rate");
  focp->add_option("--tol", sweep.tol_percent, "Convergence tolerance, percent relative change");
  focp->add_option("--max-iter", sweep.max_iterations, "Iteration cap");

  auto* equilibrium = app.add_subcommand("equilibrium", "Endemic equilibrium of the unforced model");
  add_common(equilibrium, cfg, method);

  try {
    if (const auto path = take_config_path(args)) inject_config(args, read_config_file(*path));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::IoError ? kFailure : kUsage;
  }

  cfg.method = method == "euler" ? Method::Euler : Method::Pece;
  try {
    if (simulate->parsed()) {
      cfg.scenario = Scenario::Simulate;
      cfg.validate();
      const Trajectory traj = run_simulate(cfg);
      out << "wrote " << (cfg.output_dir / (std::string("simulate_") + method + ".csv")).string() << " ("
          << traj.size() << " nodes)\n";
    } else if (compare->parsed()) {
      cfg.scenario = Scenario::Compare;
      cfg.validate();
      const CompareOutcome outcome = run_compare(cfg);
      out << outcome.report.text();
    } else if (focp->parsed()) {
      cfg.scenario = Scenario::Focp;
      cfg.sweep = sweep;
      cfg.validate();
      const FocpOutcome outcome = run_focp(cfg);
      const auto& r = outcome.controlled;
      out << "iterations = " << r.iterations << (r.converged ? " (converged)" : " (NOT converged)") << '\n'
          << "final change = " << r.final_metric << " %\n"
          << "objective controlled = " << format_value(r.objective) << '\n'
          << "objective uncontrolled = " << format_value(outcome.uncontrolled_objective) << '\n';
      if (!r.converged) {
        err << "error: sweep did not converge within " << sweep.max_iterations << " iterations\n";
        return kFailure;
      }
    } else if (equilibrium->parsed()) {
      cfg.scenario = Scenario::Equilibrium;
      cfg.validate();
      print_state(out, run_equilibrium(cfg));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e.kind()) ? kUsage : kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return 0;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace fracrsv
