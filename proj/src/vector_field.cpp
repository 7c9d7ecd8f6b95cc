#include "fracrsv/vector_field.hpp"

#include "fracrsv/error.hpp"

namespace fracrsv {

VectorField::VectorField(std::size_t dimension, Eval eval, std::optional<FractionalGrid> bound)
    : dim_(dimension), eval_(std::move(eval)), bound_(std::move(bound)) {
  if (dim_ == 0) throw Error(ErrorKind::InvalidArgument, "vector field dimension must be >= 1");
  if (!eval_) throw Error(ErrorKind::InvalidArgument, "vector field needs an evaluation function");
}

std::vector<double> VectorField::operator()(Node at, std::span<const double> y) const {
  std::vector<double> out(dim_);
  eval_(at, y, out);
  return out;
}

void VectorField::check_grid(const FractionalGrid& grid) const {
  if (bound_ && !bound_->same_as(grid))
    throw Error(ErrorKind::GridMismatch, "field carries node data for a different grid");
}

}  // namespace fracrsv
