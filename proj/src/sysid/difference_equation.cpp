#include "soro/sysid/difference_equation.hpp"

#include <stdexcept>

namespace soro::sysid {

double predict_one_step(const DifferenceEquationModel& m, const DatasetZN& z, std::size_t t) {
  const std::size_t n = m.a.size();
  const std::size_t mm = m.b.size();
  if (n == 0 && mm == 0) throw std::invalid_argument("predict_one_step: empty model");
  if (t < std::max(n, mm) || t >= z.size())
    throw std::invalid_argument("predict_one_step: index " + std::to_string(t) +
                                " outside the valid range");
  double acc = 0.0;
  for (std::size_t i = 1; i <= n; ++i) acc -= m.a[i - 1] * z.y.samples[t - i];
  for (std::size_t j = 1; j <= mm; ++j) acc += m.b[j - 1] * z.u.samples[t - j];
  return acc;
}

std::vector<double> simulate_difference_equation(const DifferenceEquationModel& m,
                                                 const std::vector<double>& u) {
  std::vector<double> y(u.size(), 0.0);
  for (std::size_t t = 0; t < u.size(); ++t) {
    double acc = 0.0;
    for (std::size_t i = 1; i <= m.a.size() && i <= t; ++i) acc -= m.a[i - 1] * y[t - i];
    for (std::size_t j = 1; j <= m.b.size() && j <= t; ++j) acc += m.b[j - 1] * u[t - j];
    y[t] = acc;
  }
  return y;
}

}  // namespace soro::sysid
