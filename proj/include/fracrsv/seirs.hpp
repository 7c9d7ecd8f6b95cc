#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fracrsv/grid.hpp"
#include "fracrsv/trajectory.hpp"
#include "fracrsv/vector_field.hpp"

namespace fracrsv {

/// Constants of the seasonally forced SEIRS-alpha model. Rates are per year;
/// every rate is raised to the power `alpha` when the dynamics are built so
/// that both sides of the fractional equations carry units of time^-alpha.
struct SeirsParams {
  double mu = 0.0113;      // birth = death rate
  double nu = 36.0;        // loss of infectiousness
  double gamma_r = 1.8;    // loss of immunity
  double epsilon = 91.0;   // exit from latency
  double b0 = 85.0;        // mean transmission
  double b1 = 0.167;       // seasonal amplitude of beta
  double c1 = 0.167;       // seasonal amplitude of lambda
  double phi = 1.5707963267948966;  // phase (pi/2)
  double alpha = 0.995;

  /// Throws Error{InvalidOrder} or Error{InvalidArgument}.
  void validate() const;
};

/// Florida RSV values with alpha = 0.995.
SeirsParams florida_default();

/// Known names: "florida-default". Throws Error{InvalidArgument} otherwise.
SeirsParams preset(std::string_view name);

struct SeirsState {
  double S = 0.0;
  double E = 0.0;
  double I = 0.0;
  double R = 0.0;

  std::array<double, 4> as_array() const { return {S, E, I, R}; }
  double total() const { return S + E + I + R; }
};

/// Florida endemic starting state (fractions of the population).
SeirsState florida_initial_state();

inline const std::vector<std::string>& state_labels() {
  static const std::vector<std::string> labels{"S", "E", "I", "R"};
  return labels;
}
inline const std::vector<std::string>& costate_labels() {
  static const std::vector<std::string> labels{"p1", "p2", "p3", "p4"};
  return labels;
}

/// Node-sampled treatment rate bounded to [0, upper].
class ControlSignal {
 public:
  /// All-zero control.
  ControlSignal(FractionalGrid grid, double upper);
  /// Throws Error{InvalidArgument} if a value leaves [0, upper] or the sizes differ.
  ControlSignal(FractionalGrid grid, std::vector<double> values, double upper);

  const FractionalGrid& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double upper() const noexcept { return upper_; }
  double operator[](std::size_t j) const { return values_[j]; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  FractionalGrid grid_;
  std::vector<double> values_;
  double upper_;
};

/// Rate constants after the alpha exponent is applied.
struct CorrectedRates {
  double mu, nu, gamma_r, epsilon, b0;
};
CorrectedRates corrected_rates(const SeirsParams& p);

/// beta(t) = b0^a (1 + b1 cos(2 pi t + phi))
double forcing_beta(const SeirsParams& p, double t);
/// lambda(t) = mu^a (1 + c1 cos(2 pi t + phi))
double forcing_lambda(const SeirsParams& p, double t);

/// SEIRS-alpha right-hand side in (S, E, I, R). With a control, the treated
/// flow T(t) I moves from I to R and the field is bound to the control's grid.
VectorField state_field(const SeirsParams& p, std::optional<ControlSignal> control = std::nullopt);

/// Co-state right-hand side in reversed time t' = t_f - t. The state and
/// control arrays (and beta at the original nodes) are reversed once up
/// front, so node j of the returned field reads original node n-1-j.
/// Integrating from a zero initial co-state and reversing the result gives
/// p(t) with p(t_f) = 0. Throws Error{GridMismatch}.
VectorField adjoint_field(const SeirsParams& p, const Trajectory& state, const ControlSignal& control, double k1);

/// Endemic steady state of the unforced (b1 = c1 = 0) model. Throws
/// Error{InvalidArgument} if forcing is present and Error{NoEndemicRoot} if
/// only the disease-free state exists.
SeirsState endemic_equilibrium(const SeirsParams& p);

}  // namespace fracrsv
