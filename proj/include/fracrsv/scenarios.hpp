#pragma once

#include <ostream>

#include "fracrsv/report.hpp"
#include "fracrsv/run_config.hpp"
#include "fracrsv/sweep.hpp"
#include "fracrsv/trajectory.hpp"

namespace fracrsv {

/// Scenario drivers behind the CLI. Each returns its in-memory result and,
/// when `write` is set, writes CSV and plot files into cfg.output_dir.

Trajectory run_simulate(const RunConfig& cfg, bool write = true);

struct CompareOutcome {
  Trajectory euler;
  Trajectory pece;
  Trajectory reference;  // refined PECE sampled at the coarse nodes
  CompareReport report;
};
CompareOutcome run_compare(const RunConfig& cfg, bool write = true);

struct FocpOutcome {
  SweepResult controlled;
  Trajectory uncontrolled;
  double uncontrolled_objective = 0.0;
};
FocpOutcome run_focp(const RunConfig& cfg, bool write = true);

/// Forcing is switched off (b1 = c1 = 0) before solving.
SeirsState run_equilibrium(const RunConfig& cfg);

}  // namespace fracrsv
