#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fracrsv/sweep.hpp"
#include "fracrsv/trajectory.hpp"

namespace fracrsv {

/// Fixed-point with nine fractional digits, e.g. 0.426282000.
std::string format_value(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws Error{UnknownColumn}.
  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
};

/// Writes `t` followed by one column per component (labels default to S,E,I,R
/// for 4-component trajectories). Throws Error{IoError}.
void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path);

/// t,S,E,I,R,T,p1,p2,p3,p4
void write_sweep_csv(const SweepResult& result, const std::filesystem::path& path);

std::string trajectory_csv(const Trajectory& traj);
std::string sweep_csv(const SweepResult& result);

CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::filesystem::path& path);

/// Rebuilds a trajectory from a CSV written by this module. The grid is
/// reconstructed from the row count and last `t`; `alpha` is not stored.
Trajectory read_trajectory_csv(const std::filesystem::path& path, double alpha);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace fracrsv
