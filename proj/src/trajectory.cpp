#include "fracrsv/trajectory.hpp"

#include "fracrsv/error.hpp"

namespace fracrsv {

Trajectory::Trajectory(FractionalGrid grid, std::size_t dimension, std::vector<std::string> labels)
    : grid_(std::move(grid)), dim_(dimension), values_(grid_.n_points() * dimension, 0.0) {
  set_labels(std::move(labels));
}

void Trajectory::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != dim_)
    throw Error(ErrorKind::InvalidArgument, "label count does not match trajectory dimension");
  labels_ = std::move(labels);
}

std::vector<double> Trajectory::component(std::size_t i) const {
  std::vector<double> out(size());
  for (std::size_t j = 0; j < size(); ++j) out[j] = (*this)(i, j);
  return out;
}

Trajectory downsample(const Trajectory& fine, const FractionalGrid& coarse) {
  const std::size_t nf = fine.grid().n_points();
  const std::size_t nc = coarse.n_points();
  if (fine.grid().t_final() != coarse.t_final() || fine.grid().alpha() != coarse.alpha() ||
      (nf - 1) % (nc - 1) != 0)
    throw Error(ErrorKind::GridMismatch, "fine grid is not a node-aligned refinement of the coarse grid");
  const std::size_t factor = (nf - 1) / (nc - 1);

  Trajectory out(coarse, fine.dimension(), fine.labels());
  for (std::size_t j = 0; j < nc; ++j)
    for (std::size_t i = 0; i < fine.dimension(); ++i) out(i, j) = fine(i, j * factor);
  return out;
}

}  // namespace fracrsv
