#pragma once

#include <string>
#include <vector>

#include "fracrsv/solvers.hpp"
#include "fracrsv/trajectory.hpp"

namespace fracrsv {

/// Norms of (method - reference), one record per component.
struct NormTable {
  std::string method;
  std::vector<std::string> components;
  std::vector<NormRecord> norms;
};

struct CompareReport {
  NormTable euler;
  NormTable pece;

  /// Aligned plain-text tables, one block per method.
  std::string text() const;
  /// method,norm,<components...>
  std::string csv() const;
};

/// Throws Error{GridMismatch} unless all three share a grid.
CompareReport compare_report(const Trajectory& euler, const Trajectory& pece, const Trajectory& reference);

}  // namespace fracrsv
