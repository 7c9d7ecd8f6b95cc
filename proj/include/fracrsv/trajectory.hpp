#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fracrsv/grid.hpp"

namespace fracrsv {

/// Node-sampled solution: `dimension()` components at each grid node.
/// Stored time-major; `component(i)` copies one row of the d x n view.
class Trajectory {
 public:
  Trajectory(FractionalGrid grid, std::size_t dimension, std::vector<std::string> labels = {});

  const FractionalGrid& grid() const noexcept { return grid_; }
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return grid_.n_points(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  double operator()(std::size_t component, std::size_t node) const { return values_[node * dim_ + component]; }
  double& operator()(std::size_t component, std::size_t node) { return values_[node * dim_ + component]; }

  std::span<const double> at_node(std::size_t node) const { return {values_.data() + node * dim_, dim_}; }
  std::span<double> at_node(std::size_t node) { return {values_.data() + node * dim_, dim_}; }

  std::vector<double> component(std::size_t i) const;
  std::span<const double> raw() const noexcept { return values_; }

 private:
  FractionalGrid grid_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<double> values_;
};

/// Picks every `coarse`-aligned node out of a refined trajectory. Throws
/// Error{GridMismatch} unless fine nodes = (coarse nodes - 1) * m + 1.
Trajectory downsample(const Trajectory& fine, const FractionalGrid& coarse);

}  // namespace fracrsv
