#include "fracrsv/weights.hpp"

#include <cmath>

#include "fracrsv/grid.hpp"

namespace fracrsv {

namespace {

// Below this lag the closed form loses at most a few digits.
constexpr std::size_t kSeriesThreshold = 32;
constexpr int kSeriesTerms = 8;

// k^(a-1) * 2 * sum_{m>=1} C(a+1, 2m) k^(2-2m): the even part of the
// binomial expansion of (1+1/k)^(a+1) + (1-1/k)^(a+1) - 2, scaled by k^(a+1).
double trap_weight_series(double alpha, std::size_t k) {
  const double p = alpha + 1.0;
  const double x2 = 1.0 / (static_cast<double>(k) * static_cast<double>(k));
  double binom = p * (p - 1.0) / 2.0;  // C(p, 2)
  double xpow = 1.0;
  double sum = 0.0;
  for (int m = 1; m <= kSeriesTerms; ++m) {
    sum += binom * xpow;
    const double n = 2.0 * m;
    binom *= (p - n) / (n + 1.0) * (p - n - 1.0) / (n + 2.0);
    xpow *= x2;
  }
  return 2.0 * std::pow(static_cast<double>(k), alpha - 1.0) * sum;
}

}  // namespace

double trap_weight_direct(double alpha, std::size_t k) {
  const double p = alpha + 1.0;
  const double kk = static_cast<double>(k);
  return std::pow(kk + 1.0, p) - 2.0 * std::pow(kk, p) + std::pow(kk - 1.0, p);
}

RectWeights::RectWeights(double alpha, std::size_t n) : alpha_(alpha), w_(n + 1, 0.0) {
  check_order(alpha);
  double prev = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double cur = std::pow(static_cast<double>(k), alpha);
    w_[k] = cur - prev;
    prev = cur;
  }
}

TrapWeights::TrapWeights(double alpha, std::size_t n) : alpha_(alpha), w_(n + 1, 0.0) {
  check_order(alpha);
  for (std::size_t k = 1; k <= n; ++k)
    w_[k] = k < kSeriesThreshold ? trap_weight_direct(alpha, k) : trap_weight_series(alpha, k);
}

double TrapWeights::head(std::size_t j) const {
  const double jj = static_cast<double>(j);
  return std::pow(jj - 1.0, alpha_ + 1.0) - (jj - 1.0 - alpha_) * std::pow(jj, alpha_);
}

RectWeights rect_weights(double alpha, std::size_t n) { return RectWeights(alpha, n); }
TrapWeights trap_weights(double alpha, std::size_t n) { return TrapWeights(alpha, n); }

}  // namespace fracrsv
