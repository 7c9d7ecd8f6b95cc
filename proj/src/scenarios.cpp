#include "fracrsv/scenarios.hpp"

#include <exception>
#include <filesystem>
#include <optional>

#include "fracrsv/csv.hpp"
#include "fracrsv/error.hpp"
#include "fracrsv/plot_script.hpp"
#include "fracrsv/solvers.hpp"

namespace fracrsv {

namespace {

std::filesystem::path prepare_dir(const RunConfig& cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create '" + cfg.output_dir.string() + "': " + ec.message());
  return cfg.output_dir;
}

Trajectory labelled(Trajectory t) {
  t.set_labels(state_labels());
  return t;
}

const char* method_name(Method m) { return m == Method::Euler ? "euler" : "pece"; }

}  // namespace

Trajectory run_simulate(const RunConfig& cfg, bool write) {
  cfg.validate();
  const FractionalGrid grid = make_grid(cfg.alpha, cfg.t_final, cfg.n_points);
  const auto y0 = florida_initial_state().as_array();
  const VectorField field = state_field(cfg.params());
  Trajectory traj = labelled(cfg.method == Method::Euler ? solve_euler(field, y0, grid) : solve_pece(field, y0, grid));

  if (write) {
    const auto dir = prepare_dir(cfg);
    const std::string stem = std::string("simulate_") + method_name(cfg.method);
    write_trajectory_csv(traj, dir / (stem + ".csv"));
    const PlotSource src{dir / (stem + ".csv"), {}};
    emit_plot_script(std::span(&src, 1), state_labels(), dir / (stem + ".gp"));
  }
  return traj;
}

CompareOutcome run_compare(const RunConfig& cfg, bool write) {
  cfg.validate();
  const FractionalGrid grid = make_grid(cfg.alpha, cfg.t_final, cfg.n_points);
  const FractionalGrid fine = refine_grid(grid, cfg.refine);
  const auto y0 = florida_initial_state().as_array();
  const VectorField field = state_field(cfg.params());

  // Three independent solves; run them side by side.
  std::optional<Trajectory> euler, pece, reference;
  std::exception_ptr failure[3];
#pragma omp parallel sections
  {
#pragma omp section
    try {
      euler = solve_euler(field, y0, grid);
    } catch (...) {
      failure[0] = std::current_exception();
    }
#pragma omp section
    try {
      pece = solve_pece(field, y0, grid);
    } catch (...) {
      failure[1] = std::current_exception();
    }
#pragma omp section
    try {
      reference = downsample(solve_pece(field, y0, fine), grid);
    } catch (...) {
      failure[2] = std::current_exception();
    }
  }
  for (const auto& f : failure)
    if (f) std::rethrow_exception(f);

  CompareOutcome outcome{labelled(std::move(*euler)), labelled(std::move(*pece)), labelled(std::move(*reference)),
                         {}};
  outcome.report = compare_report(outcome.euler, outcome.pece, outcome.reference);

  if (write) {
    const auto dir = prepare_dir(cfg);
    write_trajectory_csv(outcome.euler, dir / "compare_euler.csv");
    write_trajectory_csv(outcome.pece, dir / "compare_pece.csv");
    write_trajectory_csv(outcome.reference, dir / "compare_reference.csv");
    write_text(dir / "compare_norms.csv", outcome.report.csv());
    write_text(dir / "compare_norms.txt", outcome.report.text());
    const PlotSource sources[] = {{dir / "compare_reference.csv", "reference"},
                                  {dir / "compare_euler.csv", "Euler"},
                                  {dir / "compare_pece.csv", "PECE"}};
    for (const auto& c : state_labels()) {
      const std::string col[] = {c};
      emit_plot_script(sources, col, dir / ("compare_" + c + ".gp"), c + "(t): Euler and PECE against reference");
    }
  }
  return outcome;
}

FocpOutcome run_focp(const RunConfig& cfg, bool write) {
  cfg.validate();
  const FractionalGrid grid = make_grid(cfg.alpha, cfg.t_final, cfg.n_points);
  const SeirsParams params = cfg.params();
  const SeirsState y0 = florida_initial_state();

  ForwardBackwardSweep sweep(params, y0, grid, *cfg.sweep);
  const ControlSignal none(grid, cfg.sweep->t_max_control);
  FocpOutcome outcome{sweep.run(), sweep.solve_state(none), 0.0};
  outcome.uncontrolled_objective = objective(outcome.uncontrolled, none, cfg.sweep->k1, cfg.sweep->k2);

  if (write) {
    const auto dir = prepare_dir(cfg);
    write_sweep_csv(outcome.controlled, dir / "focp_controlled.csv");
    write_trajectory_csv(outcome.uncontrolled, dir / "focp_uncontrolled.csv");
    const PlotSource pair[] = {{dir / "focp_uncontrolled.csv", "without control"},
                               {dir / "focp_controlled.csv", "with control"}};
    for (const auto& c : state_labels()) {
      const std::string col[] = {c};
      emit_plot_script(pair, col, dir / ("focp_" + c + ".gp"), c + "(t) with and without treatment");
    }
    const PlotSource ctrl{dir / "focp_controlled.csv", {}};
    const std::string t_col[] = {"T"};
    emit_plot_script(std::span(&ctrl, 1), t_col, dir / "focp_T.gp", "optimal treatment");
  }
  return outcome;
}

SeirsState run_equilibrium(const RunConfig& cfg) {
  cfg.validate();
  SeirsParams p = cfg.params();
  p.b1 = 0.0;
  p.c1 = 0.0;
  return endemic_equilibrium(p);
}

}  // namespace fracrsv
