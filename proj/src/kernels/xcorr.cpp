#include "soro/kernels/xcorr.hpp"

#include <algorithm>
#include <stdexcept>

namespace soro::kernels {

Exec default_exec() {
#ifdef _OPENMP
  return Exec::Parallel;
#else
  return Exec::Serial;
#endif
}

namespace {

inline double lag_sum(std::span<const double> x, std::span<const double> y, int lag) {
  const int nx = static_cast<int>(x.size());
  const int ny = static_cast<int>(y.size());
  const int t0 = std::max(0, lag);
  const int t1 = std::min(ny - 1, nx - 1 + lag);
  double acc = 0.0;
  for (int t = t0; t <= t1; ++t) acc += x[static_cast<std::size_t>(t - lag)] * y[static_cast<std::size_t>(t)];
  return acc;
}

}  // namespace

std::vector<double> lagged_products(std::span<const double> x, std::span<const double> y,
                                    int lag_min, int lag_max, Exec exec) {
  if (lag_max < lag_min) throw std::invalid_argument("lagged_products: lag_max < lag_min");
  const int count = lag_max - lag_min + 1;
  std::vector<double> out(static_cast<std::size_t>(count));
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = lag_sum(x, y, lag_min + j);
  } else {
    for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = lag_sum(x, y, lag_min + j);
  }
  return out;
}

}  // namespace soro::kernels
