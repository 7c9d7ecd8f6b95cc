#include "fracrsv/history_kernels.hpp"

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fracrsv::kernels {

namespace {
constexpr std::size_t kParallelThreshold = 2048;
}

std::size_t parallel_threshold() noexcept { return kParallelThreshold; }

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void weighted_history_serial(std::span<const double> w, std::span<const double> hist, std::size_t dim,
                             std::size_t j, std::size_t first, std::size_t last, std::span<double> acc) {
  std::fill(acc.begin(), acc.begin() + dim, 0.0);
  for (std::size_t k = first; k < last; ++k) {
    const double wk = w[j - k];
    const double* row = hist.data() + k * dim;
    for (std::size_t i = 0; i < dim; ++i) acc[i] += wk * row[i];
  }
}

void weighted_history_parallel(std::span<const double> w, std::span<const double> hist, std::size_t dim,
                               std::size_t j, std::size_t first, std::size_t last, std::span<double> acc) {
  const std::size_t len = last > first ? last - first : 0;
  const int threads = max_threads();
  if (len < kParallelThreshold || threads < 2) {
    weighted_history_serial(w, hist, dim, j, first, last, acc);
    return;
  }

  std::vector<double> partial(static_cast<std::size_t>(threads) * dim, 0.0);
  int used = 1;
#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    const auto nt = static_cast<std::size_t>(omp_get_num_threads());
#pragma omp single
    used = static_cast<int>(nt);
#else
    const std::size_t tid = 0, nt = 1;
#endif
    const std::size_t chunk = (len + nt - 1) / nt;
    const std::size_t lo = first + std::min(len, tid * chunk);
    const std::size_t hi = first + std::min(len, (tid + 1) * chunk);
    double* mine = partial.data() + tid * dim;
    for (std::size_t k = lo; k < hi; ++k) {
      const double wk = w[j - k];
      const double* row = hist.data() + k * dim;
      for (std::size_t i = 0; i < dim; ++i) mine[i] += wk * row[i];
    }
  }

  std::fill(acc.begin(), acc.begin() + dim, 0.0);
  for (int t = 0; t < used; ++t)
    for (std::size_t i = 0; i < dim; ++i) acc[i] += partial[static_cast<std::size_t>(t) * dim + i];
}

}  // namespace fracrsv::kernels
