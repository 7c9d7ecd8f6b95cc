#include "fracrsv/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracrsv/error.hpp"

namespace fracrsv {

namespace {

void require_finite(std::span<const double> v, std::size_t step, const char* what) {
  for (double x : v)
    if (!std::isfinite(x))
      throw Error(ErrorKind::NonFiniteState, std::string(what) + " became non-finite at step " + std::to_string(step));
}

}  // namespace

FractionalSolver::FractionalSolver(FractionalGrid grid, SolveOptions options)
    : grid_(std::move(grid)),
      options_(options),
      rect_(grid_.alpha(), grid_.n_points()),
      trap_(grid_.alpha(), grid_.n_points()),
      rect_scale_(std::pow(grid_.step(), grid_.alpha()) / std::tgamma(1.0 + grid_.alpha())),
      trap_scale_(std::pow(grid_.step(), grid_.alpha()) / std::tgamma(2.0 + grid_.alpha())) {}

void FractionalSolver::check_inputs(const VectorField& field, std::span<const double> y0) const {
  if (y0.size() != field.dimension())
    throw Error(ErrorKind::InvalidArgument, "initial condition has " + std::to_string(y0.size()) +
                                                " components, field expects " + std::to_string(field.dimension()));
  field.check_grid(grid_);
  require_finite(y0, 0, "initial condition");
}

Trajectory FractionalSolver::euler(const VectorField& field, std::span<const double> y0) const {
  check_inputs(field, y0);
  const std::size_t d = field.dimension();
  const std::size_t n = grid_.n_points();
  const auto& t = grid_.nodes();

  Trajectory out(grid_, d);
  std::vector<double> f(n * d);
  std::vector<double> acc(d);

  std::copy(y0.begin(), y0.end(), out.at_node(0).begin());
  field({0, t[0]}, y0, std::span(f).subspan(0, d));
  require_finite(std::span(f).subspan(0, d), 0, "right-hand side");

  for (std::size_t j = 1; j < n; ++j) {
    kernels::weighted_history(options_.execution, rect_.by_lag(), f, d, j, 0, j, acc);
    auto yj = out.at_node(j);
    for (std::size_t i = 0; i < d; ++i) yj[i] = y0[i] + rect_scale_ * acc[i];
    require_finite(yj, j, "state");

    auto fj = std::span(f).subspan(j * d, d);
    field({j, t[j]}, yj, fj);
    require_finite(fj, j, "right-hand side");
  }
  return out;
}

Trajectory FractionalSolver::pece(const VectorField& field, std::span<const double> y0) const {
  check_inputs(field, y0);
  const std::size_t d = field.dimension();
  const std::size_t n = grid_.n_points();
  const auto& t = grid_.nodes();

  Trajectory out(grid_, d);
  std::vector<double> f(n * d);
  std::vector<double> acc(d), pred(d), fpred(d);

  std::copy(y0.begin(), y0.end(), out.at_node(0).begin());
  const auto f0 = std::span<const double>(f).subspan(0, d);
  field({0, t[0]}, y0, std::span(f).subspan(0, d));
  require_finite(f0, 0, "right-hand side");

  for (std::size_t j = 1; j < n; ++j) {
    // predict
    kernels::weighted_history(options_.execution, rect_.by_lag(), f, d, j, 0, j, acc);
    for (std::size_t i = 0; i < d; ++i) pred[i] = y0[i] + rect_scale_ * acc[i];
    require_finite(pred, j, "predictor");

    // evaluate
    field({j, t[j]}, pred, fpred);
    require_finite(fpred, j, "right-hand side");

    // correct
    kernels::weighted_history(options_.execution, trap_.by_lag(), f, d, j, 1, j, acc);
    const double head = trap_.head(j);
    auto yj = out.at_node(j);
    for (std::size_t i = 0; i < d; ++i) yj[i] = y0[i] + trap_scale_ * (fpred[i] + head * f0[i] + acc[i]);
    require_finite(yj, j, "state");

    // evaluate
    auto fj = std::span(f).subspan(j * d, d);
    field({j, t[j]}, yj, fj);
    require_finite(fj, j, "right-hand side");
  }
  return out;
}

Trajectory solve_euler(const VectorField& field, std::span<const double> y0, const FractionalGrid& grid,
                       SolveOptions options) {
  return FractionalSolver(grid, options).euler(field, y0);
}

Trajectory solve_pece(const VectorField& field, std::span<const double> y0, const FractionalGrid& grid,
                      SolveOptions options) {
  return FractionalSolver(grid, options).pece(field, y0);
}

std::vector<NormRecord> diff_norms(const Trajectory& a, const Trajectory& b) {
  if (!a.grid().same_as(b.grid()) || a.dimension() != b.dimension())
    throw Error(ErrorKind::GridMismatch, "trajectories differ in grid or dimension");

  std::vector<NormRecord> out(a.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    double sq = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const double diff = std::abs(a(i, j) - b(i, j));
      out[i].l1 += diff;
      sq += diff * diff;
      out[i].linf = std::max(out[i].linf, diff);
    }
    out[i].l2 = std::sqrt(sq);
  }
  return out;
}

}  // namespace fracrsv
