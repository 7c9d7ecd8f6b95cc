#include "fracrsv/grid.hpp"

#include <cmath>
#include <string>

#include "fracrsv/error.hpp"

namespace fracrsv {

void check_order(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw Error(ErrorKind::InvalidOrder, "derivative order must lie in (0, 1], got " + std::to_string(alpha));
}

FractionalGrid::FractionalGrid(double alpha, double t_final, std::vector<double> nodes)
    : alpha_(alpha),
      t_final_(t_final),
      step_(t_final / static_cast<double>(nodes.size() - 1)),
      nodes_(std::move(nodes)) {}

bool FractionalGrid::same_as(const FractionalGrid& other) const noexcept {
  return alpha_ == other.alpha_ && t_final_ == other.t_final_ && nodes_.size() == other.nodes_.size();
}

FractionalGrid make_grid(double alpha, double t_final, std::size_t n_points) {
  check_order(alpha);
  if (!(t_final > 0.0) || !std::isfinite(t_final))
    throw Error(ErrorKind::InvalidGrid, "t_final must be positive and finite");
  if (n_points < 2) throw Error(ErrorKind::InvalidGrid, "a grid needs at least 2 points");

  const double h = t_final / static_cast<double>(n_points - 1);
  std::vector<double> nodes(n_points);
  for (std::size_t j = 0; j + 1 < n_points; ++j) nodes[j] = static_cast<double>(j) * h;
  nodes.back() = t_final;
  return FractionalGrid(alpha, t_final, std::move(nodes));
}

FractionalGrid refine_grid(const FractionalGrid& coarse, std::size_t factor) {
  if (factor < 1) throw Error(ErrorKind::InvalidGrid, "refinement factor must be >= 1");
  return make_grid(coarse.alpha(), coarse.t_final(), (coarse.n_points() - 1) * factor + 1);
}

}  // namespace fracrsv
