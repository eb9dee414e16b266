#pragma once

#include <span>
#include <vector>

namespace soro::kernels {

/// Kernel execution policy. Parallel variants partition work so each output
/// element is produced by exactly one thread; results are bit-identical to
/// the serial reference, which stays in the build as the test oracle.
enum class Exec { Serial, Parallel };

/// Policy used by the library wrappers: Parallel when compiled with OpenMP.
Exec default_exec();

/// Raw lagged product sums over the valid overlap:
///   r[j] = sum_t x[t - lag_j] * y[t],  lag_j = lag_min + j,
/// for all t with both indices in range. Means are the caller's business.
std::vector<double> lagged_products(std::span<const double> x, std::span<const double> y,
                                    int lag_min, int lag_max, Exec exec = default_exec());

}  // namespace soro::kernels
