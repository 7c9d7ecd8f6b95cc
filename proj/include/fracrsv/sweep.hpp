#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fracrsv/seirs.hpp"
#include "fracrsv/solvers.hpp"
#include "fracrsv/trajectory.hpp"

namespace fracrsv {

struct SweepConfig {
  double k1 = 1.0;              // weight on infectious fraction
  double k2 = 0.001;            // weight on squared treatment
  double t_max_control = 1.0;   // upper bound on treatment
  double tol_percent = 0.001;   // stop when the largest relative change (in %) is below this
  double relaxation = 0.5;      // weight of the new extremal control
  std::size_t max_iterations = 200;

  void validate() const;
};

struct SweepResult {
  Trajectory state;    // S, E, I, R under `control`
  Trajectory costate;  // p1..p4, zero at t_final
  ControlSignal control;
  std::size_t iterations = 0;
  double objective = 0.0;
  bool converged = false;
  double final_metric = 0.0;                // last relative change, percent
  std::vector<double> objective_history;    // cost of each forward solve
  std::vector<double> metric_history;
};

/// Elementwise clamp to [0, upper].
std::vector<double> project(std::span<const double> values, double upper);

/// Pointwise minimiser of the Hamiltonian, min{max{0, (p3 - p4) I / (2 k2)}, t_max}.
std::vector<double> extremal_control(std::span<const double> p3, std::span<const double> p4,
                                     std::span<const double> infectious, double k2, double t_max);

/// Trapezoid rule for int_0^tf (k1 I + k2 T^2) dt on the state grid.
double objective(const Trajectory& state, const ControlSignal& control, double k1, double k2);

/// Forward-backward sweep driver. Holds one solver so memory weights are
/// shared by every state and co-state solve of the run.
class ForwardBackwardSweep {
 public:
  struct Iterate {
    Trajectory state;
    Trajectory costate;
    ControlSignal control;  // relaxed update produced from state/costate
  };

  ForwardBackwardSweep(SeirsParams params, SeirsState y0, FractionalGrid grid, SweepConfig config,
                       SolveOptions options = {});

  Trajectory solve_state(const ControlSignal& control) const;
  Trajectory solve_costate(const Trajectory& state, const ControlSignal& control) const;

  /// One pass: state under `control`, co-state, then the relaxed control update.
  Iterate step(const ControlSignal& control) const;

  /// Iterates from the zero control until the change metric drops to
  /// `tol_percent` or `max_iterations` is reached (converged = false).
  SweepResult run() const;

  const FractionalGrid& grid() const noexcept { return solver_.grid(); }
  const SweepConfig& config() const noexcept { return config_; }

 private:
  SeirsParams params_;
  std::array<double, 4> y0_;
  SweepConfig config_;
  FractionalSolver solver_;
};

/// 100 * max over S, E, I, R, p1..p4, T of max|new - old| / max|new|.
/// Signals with max|new| < 1e-14 are left out; returns nullopt when every
/// signal is left out.
std::optional<double> change_metric_percent(const Trajectory& old_state, const Trajectory& new_state,
                                            const Trajectory& old_costate, const Trajectory& new_costate,
                                            std::span<const double> old_control, std::span<const double> new_control);

SweepResult run_sweep(const SeirsParams& params, const SeirsState& y0, const FractionalGrid& grid,
                      const SweepConfig& config, SolveOptions options = {});

}  // namespace fracrsv
