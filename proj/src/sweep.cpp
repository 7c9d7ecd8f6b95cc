#include "fracrsv/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracrsv/error.hpp"

namespace fracrsv {

namespace {

constexpr double kLiveSignal = 1e-14;

// Percent change of one signal, or nothing if the new signal is ~0.
std::optional<double> relative_change(auto&& old_at, auto&& new_at, std::size_t n) {
  double diff = 0.0, scale = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    diff = std::max(diff, std::abs(new_at(j) - old_at(j)));
    scale = std::max(scale, std::abs(new_at(j)));
  }
  if (scale < kLiveSignal) return std::nullopt;
  return 100.0 * diff / scale;
}

}  // namespace

void SweepConfig::validate() const {
  if (!(k1 >= 0.0)) throw Error(ErrorKind::InvalidArgument, "k1 must be >= 0");
  if (!(k2 > 0.0)) throw Error(ErrorKind::InvalidArgument, "k2 must be > 0");
  if (!(t_max_control >= 0.0) || !std::isfinite(t_max_control))
    throw Error(ErrorKind::InvalidArgument, "control upper bound must be finite and >= 0");
  if (!(tol_percent > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be > 0");
  if (!(relaxation > 0.0 && relaxation <= 1.0)) throw Error(ErrorKind::InvalidArgument, "relaxation must lie in (0, 1]");
  if (max_iterations < 1) throw Error(ErrorKind::InvalidArgument, "max_iterations must be >= 1");
}

std::vector<double> project(std::span<const double> values, double upper) {
  std::vector<double> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(),
                 [upper](double v) { return std::min(std::max(0.0, v), upper); });
  return out;
}

std::vector<double> extremal_control(std::span<const double> p3, std::span<const double> p4,
                                     std::span<const double> infectious, double k2, double t_max) {
  if (p3.size() != p4.size() || p3.size() != infectious.size())
    throw Error(ErrorKind::InvalidArgument, "extremal control inputs differ in length");
  if (!(k2 > 0.0)) throw Error(ErrorKind::InvalidArgument, "k2 must be > 0");
  std::vector<double> raw(p3.size());
  for (std::size_t j = 0; j < raw.size(); ++j) raw[j] = (p3[j] - p4[j]) * infectious[j] / (2.0 * k2);
  return project(raw, t_max);
}

double objective(const Trajectory& state, const ControlSignal& control, double k1, double k2) {
  if (!state.grid().same_as(control.grid()))
    throw Error(ErrorKind::GridMismatch, "objective: state and control on different grids");
  const auto& t = state.grid().nodes();
  auto integrand = [&](std::size_t j) { return k1 * state(2, j) + k2 * control[j] * control[j]; };
  double total = 0.0;
  for (std::size_t j = 1; j < state.size(); ++j) total += 0.5 * (t[j] - t[j - 1]) * (integrand(j) + integrand(j - 1));
  return total;
}

std::optional<double> change_metric_percent(const Trajectory& old_state, const Trajectory& new_state,
                                            const Trajectory& old_costate, const Trajectory& new_costate,
                                            std::span<const double> old_control, std::span<const double> new_control) {
  const std::size_t n = new_state.size();
  std::optional<double> worst;
  auto fold = [&worst](std::optional<double> v) {
    if (v) worst = std::max(worst.value_or(0.0), *v);
  };
  for (std::size_t i = 0; i < 4; ++i) {
    fold(relative_change([&](std::size_t j) { return old_state(i, j); }, [&](std::size_t j) { return new_state(i, j); }, n));
    fold(relative_change([&](std::size_t j) { return old_costate(i, j); },
                         [&](std::size_t j) { return new_costate(i, j); }, n));
  }
  fold(relative_change([&](std::size_t j) { return old_control[j]; }, [&](std::size_t j) { return new_control[j]; }, n));
  return worst;
}

ForwardBackwardSweep::ForwardBackwardSweep(SeirsParams params, SeirsState y0, FractionalGrid grid, SweepConfig config,
                                           SolveOptions options)
    : params_(params), y0_(y0.as_array()), config_(config), solver_(std::move(grid), options) {
  params_.validate();
  config_.validate();
  if (params_.alpha != solver_.grid().alpha())
    throw Error(ErrorKind::InvalidArgument, "grid order differs from the model order");
  for (double v : y0_)
    if (!(v >= 0.0)) throw Error(ErrorKind::InvalidArgument, "initial fractions must be >= 0");
  // The Florida starting state is rounded to six digits and sums to 1 + 2e-7.
  if (std::abs(y0.total() - 1.0) > 1e-6)
    throw Error(ErrorKind::InvalidArgument, "initial fractions must sum to 1, got " + std::to_string(y0.total()));
}

Trajectory ForwardBackwardSweep::solve_state(const ControlSignal& control) const {
  Trajectory s = solver_.pece(state_field(params_, control), y0_);
  s.set_labels(state_labels());
  return s;
}

Trajectory ForwardBackwardSweep::solve_costate(const Trajectory& state, const ControlSignal& control) const {
  static constexpr std::array<double, 4> zero{};
  Trajectory reversed = solver_.pece(adjoint_field(params_, state, control, config_.k1), zero);

  Trajectory p(state.grid(), 4, costate_labels());
  const std::size_t n = state.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < 4; ++i) p(i, j) = reversed(i, n - 1 - j);
  return p;
}

ForwardBackwardSweep::Iterate ForwardBackwardSweep::step(const ControlSignal& control) const {
  Trajectory state = solve_state(control);
  Trajectory costate = solve_costate(state, control);

  const std::vector<double> ext =
      extremal_control(costate.component(2), costate.component(3), state.component(2), config_.k2, config_.t_max_control);
  std::vector<double> next(ext.size());
  const double w = config_.relaxation;
  for (std::size_t j = 0; j < next.size(); ++j) next[j] = w * ext[j] + (1.0 - w) * control[j];
  // The convex combination of two feasible controls is feasible up to rounding.
  next = project(next, config_.t_max_control);

  return {std::move(state), std::move(costate), ControlSignal(grid(), std::move(next), config_.t_max_control)};
}

SweepResult ForwardBackwardSweep::run() const {
  ControlSignal control(grid(), config_.t_max_control);
  Trajectory old_state(grid(), 4, state_labels());
  Trajectory old_costate(grid(), 4, costate_labels());

  SweepResult result{old_state, old_costate, control, 0, 0.0, false, 0.0, {}, {}};
  for (std::size_t it = 1; it <= config_.max_iterations; ++it) {
    Iterate next = step(control);
    result.objective_history.push_back(objective(next.state, control, config_.k1, config_.k2));

    const auto metric = change_metric_percent(old_state, next.state, old_costate, next.costate, control.values(),
                                              next.control.values());
    if (!metric) throw Error(ErrorKind::DegenerateSignal, "every sweep signal vanished; nothing to measure");

    result.iterations = it;
    result.final_metric = *metric;
    result.metric_history.push_back(*metric);
    old_state = std::move(next.state);
    old_costate = std::move(next.costate);
    control = std::move(next.control);
    if (*metric <= config_.tol_percent) {
      result.converged = true;
      break;
    }
  }

  result.state = solve_state(control);
  result.costate = solve_costate(result.state, control);
  result.objective = objective(result.state, control, config_.k1, config_.k2);
  result.control = std::move(control);
  return result;
}

SweepResult run_sweep(const SeirsParams& params, const SeirsState& y0, const FractionalGrid& grid,
                      const SweepConfig& config, SolveOptions options) {
  return ForwardBackwardSweep(params, y0, grid, config, options).run();
}

}  // namespace fracrsv
