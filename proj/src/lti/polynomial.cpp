#include "soro/lti/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace soro::lti {

Poly poly_trim(const Poly& p, double tol) {
  std::size_t i = 0;
  while (i + 1 < p.size() && std::abs(p[i]) <= tol) ++i;
  return Poly(p.begin() + static_cast<long>(i), p.end());
}

int poly_degree(const Poly& p) {
  Poly t = poly_trim(p);
  if (t.size() == 1 && t[0] == 0.0) return 0;
  return static_cast<int>(t.size()) - 1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {0.0};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.size(), b.size());
  Poly out(n, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[n - a.size() + i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[n - b.size() + i] += b[i];
  return out;
}

Poly poly_scale(const Poly& p, double k) {
  Poly out = p;
  for (double& c : out) c *= k;
  return out;
}

std::complex<double> poly_eval(const Poly& p, std::complex<double> s) {
  std::complex<double> acc(0.0, 0.0);
  for (double c : p) acc = acc * s + c;
  return acc;
}

namespace {

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {0.0};
  Poly d(p.size() - 1);
  const int n = static_cast<int>(p.size()) - 1;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) d[i] = p[i] * static_cast<double>(n - static_cast<int>(i));
  return d;
}

// A couple of Newton steps sharpen the companion eigenvalues to the
// documented 1e-9 residual for the degree <= 8 polynomials seen here.
std::complex<double> polish_root(const Poly& p, const Poly& dp, std::complex<double> r) {
  double best = std::abs(poly_eval(p, r));
  for (int iter = 0; iter < 3; ++iter) {
    const std::complex<double> slope = poly_eval(dp, r);
    if (std::abs(slope) < 1e-300) break;
    const std::complex<double> next = r - poly_eval(p, r) / slope;
    const double res = std::abs(poly_eval(p, next));
    if (res >= best) break;
    best = res;
    r = next;
  }
  return r;
}

}  // namespace

std::vector<std::complex<double>> poly_roots(const Poly& p_in) {
  Poly p = poly_trim(p_in);
  if (p.size() <= 1) return {};
  if (p[0] == 0.0) throw std::invalid_argument("poly_roots: zero polynomial");

  // Deflate exact roots at the origin.
  std::size_t at_origin = 0;
  while (p.size() > 1 && p.back() == 0.0) {
    p.pop_back();
    ++at_origin;
  }

  std::vector<std::complex<double>> roots(at_origin, {0.0, 0.0});
  const int n = static_cast<int>(p.size()) - 1;
  if (n > 0) {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) companion(0, i) = -p[static_cast<std::size_t>(i) + 1] / p[0];
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("poly_roots: eigenvalue iteration failed");
    const Poly dp = poly_derivative(p);
    for (int i = 0; i < n; ++i) roots.push_back(polish_root(p, dp, solver.eigenvalues()(i)));
  }
  return roots;
}

double poly_root_residual(const Poly& p, std::complex<double> r) {
  double scale = 0.0;
  for (double c : p) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return 0.0;
  return std::abs(poly_eval(p, r)) / scale;
}

Poly poly_from_roots(const std::vector<std::complex<double>>& roots, double lead,
                     double imag_tol) {
  Poly out{lead};
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    const auto r = roots[i];
    const double mag = std::max(std::abs(r), 1.0);
    if (std::abs(r.imag()) <= imag_tol * mag) {
      out = poly_mul(out, {1.0, -r.real()});
      used[i] = true;
      continue;
    }
    // Find the conjugate partner.
    std::size_t partner = roots.size();
    double best = std::numeric_limits<double>::max();
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(roots[j] - std::conj(r));
      if (d < best) {
        best = d;
        partner = j;
      }
    }
    if (partner == roots.size() || best > 1e-6 * mag)
      throw std::invalid_argument("poly_from_roots: unpaired complex root");
    used[i] = used[partner] = true;
    out = poly_mul(out, {1.0, -2.0 * r.real(), std::norm(r)});
  }
  return out;
}

Poly poly_divmod(const Poly& num_in, const Poly& den_in, Poly& rem) {
  Poly num = poly_trim(num_in);
  Poly den = poly_trim(den_in);
  if (den.size() == 1 && den[0] == 0.0)
    throw std::invalid_argument("poly_divmod: division by zero polynomial");
  if (num.size() < den.size()) {
    rem = num;
    return {0.0};
  }
  Poly quot(num.size() - den.size() + 1, 0.0);
  Poly work = num;
  for (std::size_t i = 0; i < quot.size(); ++i) {
    const double q = work[i] / den[0];
    quot[i] = q;
    for (std::size_t j = 0; j < den.size(); ++j) work[i + j] -= q * den[j];
  }
  rem = poly_trim(Poly(work.end() - static_cast<long>(den.size()) + 1, work.end()));
  return quot;
}

}  // namespace soro::lti
