#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fracrsv/grid.hpp"

namespace fracrsv {

/// Evaluation point handed to a right-hand side. Solvers only evaluate at grid
/// nodes, so node-sampled data (controls, reversed arrays) can be indexed
/// directly by `index`.
struct Node {
  static constexpr std::size_t kOffGrid = std::numeric_limits<std::size_t>::max();
  std::size_t index = kOffGrid;
  double t = 0.0;
};

/// Right-hand side f(t, y) of D^a y = f(t, y) in R^d.
class VectorField {
 public:
  using Eval = std::function<void(Node, std::span<const double>, std::span<double>)>;

  /// `bound` is set by fields that carry node-sampled data; solvers refuse to
  /// integrate them on any other grid.
  VectorField(std::size_t dimension, Eval eval, std::optional<FractionalGrid> bound = std::nullopt);

  std::size_t dimension() const noexcept { return dim_; }
  const std::optional<FractionalGrid>& bound_grid() const noexcept { return bound_; }

  void operator()(Node at, std::span<const double> y, std::span<double> out) const { eval_(at, y, out); }
  std::vector<double> operator()(Node at, std::span<const double> y) const;

  /// Throws Error{GridMismatch} if the field is bound to a different grid.
  void check_grid(const FractionalGrid& grid) const;

 private:
  std::size_t dim_;
  Eval eval_;
  std::optional<FractionalGrid> bound_;
};

}  // namespace fracrsv
