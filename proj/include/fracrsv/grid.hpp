#pragma once

#include <cstddef>
#include <vector>

namespace fracrsv {

/// Uniform grid on [0, t_final] together with the derivative order.
/// Nodes are t_j = j * step; the last node is pinned to t_final exactly.
class FractionalGrid {
 public:
  double alpha() const noexcept { return alpha_; }
  double t_final() const noexcept { return t_final_; }
  double step() const noexcept { return step_; }
  std::size_t n_points() const noexcept { return nodes_.size(); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  double node(std::size_t j) const { return nodes_.at(j); }

  /// Same order, horizon and node count.
  bool same_as(const FractionalGrid& other) const noexcept;

 private:
  friend FractionalGrid make_grid(double alpha, double t_final, std::size_t n_points);
  FractionalGrid(double alpha, double t_final, std::vector<double> nodes);

  double alpha_;
  double t_final_;
  double step_;
  std::vector<double> nodes_;
};

/// Throws Error{InvalidOrder} unless 0 < alpha <= 1, Error{InvalidGrid} unless
/// t_final > 0 and n_points >= 2.
FractionalGrid make_grid(double alpha, double t_final, std::size_t n_points);

/// Grid with (coarse.n_points() - 1) * factor + 1 nodes over the same horizon,
/// so coarse node j coincides with fine node j * factor.
FractionalGrid refine_grid(const FractionalGrid& coarse, std::size_t factor);

void check_order(double alpha);

}  // namespace fracrsv
