#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracrsv {

/// Rectangle-rule memory weights b[k] = k^a - (k-1)^a, k = 1..n.
///
/// Storage is lag-indexed with a zero sentinel at index 0 so kernels can
/// address b[j - k] directly. Each b[k] is the difference of two adjacent
/// rounded powers, which is exact in floating point (Sterbenz), hence the
/// running sums reproduce m^a bit-for-bit.
class RectWeights {
 public:
  RectWeights(double alpha, std::size_t n);

  double alpha() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return w_.size() - 1; }
  double operator[](std::size_t k) const noexcept { return w_[k]; }
  /// Lag-indexed view including the index-0 sentinel.
  std::span<const double> by_lag() const noexcept { return w_; }

 private:
  double alpha_;
  std::vector<double> w_;
};

/// Trapezoid-rule (Adams-Moulton) memory weights
///   a[k] = (k+1)^(a+1) - 2 k^(a+1) + (k-1)^(a+1),  k = 1..n,
/// and the first-node weight head(j) = (j-1)^(a+1) - (j-1-a) j^a.
class TrapWeights {
 public:
  TrapWeights(double alpha, std::size_t n);

  double alpha() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return w_.size() - 1; }
  double operator[](std::size_t k) const noexcept { return w_[k]; }
  std::span<const double> by_lag() const noexcept { return w_; }

  double head(std::size_t j) const;

 private:
  double alpha_;
  std::vector<double> w_;
};

RectWeights rect_weights(double alpha, std::size_t n);
TrapWeights trap_weights(double alpha, std::size_t n);

/// Closed-form second difference, evaluated directly. Exposed for tests.
double trap_weight_direct(double alpha, std::size_t k);

}  // namespace fracrsv
