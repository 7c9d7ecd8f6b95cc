#include "fracrsv/seirs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fracrsv/error.hpp"

namespace fracrsv {

void SeirsParams::validate() const {
  check_order(alpha);
  const double rates[] = {mu, nu, gamma_r, epsilon};
  for (double r : rates)
    if (!(r >= 0.0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidArgument, "rates must be finite and >= 0");
  if (!(b0 > 0.0) || !std::isfinite(b0)) throw Error(ErrorKind::InvalidArgument, "b0 must be positive");
  if (!(b1 >= 0.0 && b1 < 1.0) || !(c1 >= 0.0 && c1 < 1.0))
    throw Error(ErrorKind::InvalidArgument, "seasonal amplitudes b1, c1 must lie in [0, 1)");
  if (!std::isfinite(phi)) throw Error(ErrorKind::InvalidArgument, "phase must be finite");
}

SeirsParams florida_default() { return SeirsParams{}; }

SeirsParams preset(std::string_view name) {
  if (name == "florida-default") return florida_default();
  throw Error(ErrorKind::InvalidArgument, "unknown parameter preset '" + std::string(name) + "'");
}

SeirsState florida_initial_state() { return {0.426282, 0.0109566, 0.0275076, 0.535254}; }

ControlSignal::ControlSignal(FractionalGrid grid, double upper)
    : ControlSignal(grid, std::vector<double>(grid.n_points(), 0.0), upper) {}

ControlSignal::ControlSignal(FractionalGrid grid, std::vector<double> values, double upper)
    : grid_(std::move(grid)), values_(std::move(values)), upper_(upper) {
  if (!(upper_ >= 0.0) || !std::isfinite(upper_))
    throw Error(ErrorKind::InvalidArgument, "control upper bound must be finite and >= 0");
  if (values_.size() != grid_.n_points())
    throw Error(ErrorKind::GridMismatch, "control has " + std::to_string(values_.size()) + " values for " +
                                             std::to_string(grid_.n_points()) + " nodes");
  for (double v : values_)
    if (!(v >= 0.0 && v <= upper_)) throw Error(ErrorKind::InvalidArgument, "control value outside [0, upper]");
}

CorrectedRates corrected_rates(const SeirsParams& p) {
  const double a = p.alpha;
  return {std::pow(p.mu, a), std::pow(p.nu, a), std::pow(p.gamma_r, a), std::pow(p.epsilon, a), std::pow(p.b0, a)};
}

namespace {

double season(double amplitude, double phi, double t) {
  return 1.0 + amplitude * std::cos(2.0 * std::numbers::pi * t + phi);
}

}  // namespace

double forcing_beta(const SeirsParams& p, double t) { return std::pow(p.b0, p.alpha) * season(p.b1, p.phi, t); }

double forcing_lambda(const SeirsParams& p, double t) { return std::pow(p.mu, p.alpha) * season(p.c1, p.phi, t); }

VectorField state_field(const SeirsParams& p, std::optional<ControlSignal> control) {
  p.validate();
  const CorrectedRates r = corrected_rates(p);

  auto rhs = [p, r](double t, double treat, std::span<const double> y, std::span<double> out) {
    const double S = y[0], E = y[1], I = y[2], R = y[3];
    const double beta = r.b0 * season(p.b1, p.phi, t);
    const double lambda = r.mu * season(p.c1, p.phi, t);
    const double infection = beta * S * I;
    out[0] = lambda - r.mu * S - infection + r.gamma_r * R;
    out[1] = infection - (r.mu + r.epsilon) * E;
    out[2] = r.epsilon * E - (r.mu + r.nu) * I - treat * I;
    out[3] = r.nu * I - (r.mu + r.gamma_r) * R + treat * I;
  };

  if (!control) {
    return VectorField(4, [rhs](Node at, std::span<const double> y, std::span<double> out) { rhs(at.t, 0.0, y, out); });
  }

  FractionalGrid bound = control->grid();
  return VectorField(
      4,
      [rhs, u = std::move(*control)](Node at, std::span<const double> y, std::span<double> out) {
        if (at.index >= u.size()) throw Error(ErrorKind::GridMismatch, "controlled field evaluated off its grid");
        rhs(at.t, u[at.index], y, out);
      },
      std::move(bound));
}

VectorField adjoint_field(const SeirsParams& p, const Trajectory& state, const ControlSignal& control, double k1) {
  p.validate();
  if (state.dimension() != 4) throw Error(ErrorKind::InvalidArgument, "adjoint needs a 4-component SEIRS state");
  if (!state.grid().same_as(control.grid()))
    throw Error(ErrorKind::GridMismatch, "state and control live on different grids");
  if (!(k1 >= 0.0)) throw Error(ErrorKind::InvalidArgument, "k1 must be >= 0");

  const CorrectedRates r = corrected_rates(p);
  const std::size_t n = state.size();
  const auto& t = state.grid().nodes();

  struct Reversed {
    std::vector<double> S, I, T, beta;
  } rev{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = n - 1 - j;
    rev.S[j] = state(0, src);
    rev.I[j] = state(2, src);
    rev.T[j] = control[src];
    rev.beta[j] = forcing_beta(p, t[src]);
  }

  return VectorField(
      4,
      [r, k1, rev = std::move(rev)](Node at, std::span<const double> q, std::span<double> out) {
        if (at.index >= rev.S.size()) throw Error(ErrorKind::GridMismatch, "adjoint field evaluated off its grid");
        const std::size_t j = at.index;
        const double S = rev.S[j], I = rev.I[j], T = rev.T[j], beta = rev.beta[j];
        const double p1 = q[0], p2 = q[1], p3 = q[2], p4 = q[3];
        out[0] = -(p1 * (r.mu + beta * I) - beta * I * p2);
        out[1] = -(p2 * (r.mu + r.epsilon) - r.epsilon * p3);
        out[2] = -(-k1 + beta * p1 * S - p2 * beta * S + p3 * (r.mu + r.nu + T) - p4 * (r.nu + T));
        out[3] = -(-r.gamma_r * p1 + p4 * (r.mu + r.gamma_r));
      },
      state.grid());
}

SeirsState endemic_equilibrium(const SeirsParams& p) {
  if (p.b0 == 0.0) throw Error(ErrorKind::NoEndemicRoot, "no transmission (b0 = 0): only the disease-free state exists");
  p.validate();
  if (p.b1 != 0.0 || p.c1 != 0.0)
    throw Error(ErrorKind::InvalidArgument, "equilibrium requires the unforced model (b1 = c1 = 0)");
  const CorrectedRates r = corrected_rates(p);

  // E and I equations at rest fix S* = (mu+eps)(mu+nu) / (beta eps); the
  // remaining unknown I* solves the S equation with E*, R* expressed via I*.
  if (r.epsilon == 0.0) throw Error(ErrorKind::NoEndemicRoot, "no transfer from E to I (epsilon = 0)");
  const double s_star = (r.mu + r.epsilon) * (r.mu + r.nu) / (r.b0 * r.epsilon);
  const double recov = r.mu + r.gamma_r > 0.0 ? r.nu / (r.mu + r.gamma_r) : 0.0;

  auto residual = [&](double i) { return r.mu - r.mu * s_star - r.b0 * s_star * i + r.gamma_r * recov * i; };

  double lo = 0.0, hi = 1.0;
  double f_lo = residual(lo), f_hi = residual(hi);
  if (!(s_star < 1.0) || !(f_lo > 0.0) || !(f_hi < 0.0))
    throw Error(ErrorKind::NoEndemicRoot, "transmission too weak for an endemic state with I* in (0, 1]");

  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = residual(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    (f_mid > 0.0 ? lo : hi) = mid;
  }
  const double i_star = 0.5 * (lo + hi);

  SeirsState eq;
  eq.S = s_star;
  eq.I = i_star;
  eq.E = (r.mu + r.nu) * i_star / r.epsilon;
  eq.R = recov * i_star;
  return eq;
}

}  // namespace fracrsv
