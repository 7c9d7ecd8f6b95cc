#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracrsv/grid.hpp"
#include "fracrsv/history_kernels.hpp"
#include "fracrsv/trajectory.hpp"
#include "fracrsv/vector_field.hpp"
#include "fracrsv/weights.hpp"

namespace fracrsv {

struct SolveOptions {
  kernels::Execution execution = kernels::Execution::Serial;
};

/// Caputo-sense integrators on a fixed grid. Memory weights are built once
/// per solver and shared by every solve, so a forward-backward sweep should
/// hold one instance for its whole run.
class FractionalSolver {
 public:
  explicit FractionalSolver(FractionalGrid grid, SolveOptions options = {});

  const FractionalGrid& grid() const noexcept { return grid_; }

  /// Fractional forward Euler (left rectangle rule):
  ///   y_j = y0 + h^a / G(1+a) * sum_{k<j} b[j-k] f(t_k, y_k).
  Trajectory euler(const VectorField& field, std::span<const double> y0) const;

  /// Adams-Bashforth-Moulton PECE: rectangle-rule predictor followed by one
  /// trapezoid-rule corrector evaluation,
  ///   y_j = y0 + h^a / G(2+a) * (f(t_j, y_p) + head(j) f_0 + sum_{0<k<j} a[j-k] f_k).
  Trajectory pece(const VectorField& field, std::span<const double> y0) const;

 private:
  void check_inputs(const VectorField& field, std::span<const double> y0) const;

  FractionalGrid grid_;
  SolveOptions options_;
  RectWeights rect_;
  TrapWeights trap_;
  double rect_scale_;  // h^a / G(1+a)
  double trap_scale_;  // h^a / G(2+a)
};

Trajectory solve_euler(const VectorField& field, std::span<const double> y0, const FractionalGrid& grid,
                       SolveOptions options = {});
Trajectory solve_pece(const VectorField& field, std::span<const double> y0, const FractionalGrid& grid,
                      SolveOptions options = {});

struct NormRecord {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// Per-component 1-, 2- and max-norms of a - b over all nodes (unscaled sums,
/// as in the method-comparison tables). Throws Error{GridMismatch}.
std::vector<NormRecord> diff_norms(const Trajectory& a, const Trajectory& b);

}  // namespace fracrsv
