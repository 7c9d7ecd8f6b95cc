#pragma once

#include <cstddef>
#include <span>

namespace fracrsv::kernels {

enum class Execution { Serial, Parallel };

/// Weighted memory sum shared by every fractional quadrature here:
///
///   acc[i] = sum_{k = first}^{last - 1} w[j - k] * hist[k * dim + i]
///
/// `w` is lag-indexed (w[0] is never read when last <= j), `hist` is
/// time-major with `dim` components per node. `acc` is overwritten.
void weighted_history_serial(std::span<const double> w, std::span<const double> hist, std::size_t dim,
                             std::size_t j, std::size_t first, std::size_t last, std::span<double> acc);

/// OpenMP version of the same sum. The lag range is split statically across
/// threads and the per-thread partials are combined in thread order, so the
/// result is reproducible for a fixed thread count. Ranges shorter than
/// `parallel_threshold()` run serially.
void weighted_history_parallel(std::span<const double> w, std::span<const double> hist, std::size_t dim,
                               std::size_t j, std::size_t first, std::size_t last, std::span<double> acc);

std::size_t parallel_threshold() noexcept;

inline void weighted_history(Execution exec, std::span<const double> w, std::span<const double> hist,
                             std::size_t dim, std::size_t j, std::size_t first, std::size_t last,
                             std::span<double> acc) {
  if (exec == Execution::Parallel)
    weighted_history_parallel(w, hist, dim, j, first, last, acc);
  else
    weighted_history_serial(w, hist, dim, j, first, last, acc);
}

int max_threads() noexcept;

}  // namespace fracrsv::kernels
