#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "soro/lti/polynomial.hpp"

using namespace soro::lti;

namespace {
std::vector<double> sorted_reals(const std::vector<std::complex<double>>& roots) {
  std::vector<double> out;
  for (const auto& r : roots) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("poly_mul and poly_add basics") {
  CHECK(poly_mul({1.0, 1.0}, {1.0, 2.0}) == Poly{1.0, 3.0, 2.0});
  CHECK(poly_add({1.0, 0.0}, {1.0}) == Poly{1.0, 1.0});
  CHECK(poly_degree({0.0, 0.0, 1.0, 5.0}) == 1);
}

TEST_CASE("poly_eval Horner") {
  // p(s) = s^2 + 3s + 2 at s = 2 -> 12
  CHECK(poly_eval({1.0, 3.0, 2.0}, {2.0, 0.0}).real() == doctest::Approx(12.0));
  CHECK(std::abs(poly_eval({1.0, 0.0, 1.0}, {0.0, 1.0})) == doctest::Approx(0.0));
}

TEST_CASE("roots of quadratic with known factors") {
  // (s+1)(s+2) = s^2 + 3s + 2
  const auto roots = sorted_reals(poly_roots({1.0, 3.0, 2.0}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(roots[1] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("roots at origin are exact") {
  // s^3 + 3s^2 = s^2 (s+3)
  const auto roots = poly_roots({1.0, 3.0, 0.0, 0.0});
  REQUIRE(roots.size() == 3);
  int at_zero = 0;
  for (const auto& r : roots)
    if (r == std::complex<double>(0.0, 0.0)) ++at_zero;
  CHECK(at_zero == 2);
}

TEST_CASE("complex conjugate roots round-trip through poly_from_roots") {
  const Poly p{2.0, 4.0, 10.0, 6.0};  // 2(s^2+s+... ) arbitrary stable-ish cubic
  const auto roots = poly_roots(p);
  const Poly back = poly_from_roots(roots, p[0]);
  REQUIRE(back.size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    CHECK(back[i] == doctest::Approx(p[i]).epsilon(1e-9));
}

TEST_CASE("root residuals meet the documented 1e-9 on loop polynomials") {
  // The degree <= 8 denominators this project produces: plant, PI open
  // loop, Pade-substituted cascade.
  const Poly plant_den{972.57, 109.7257, 1.0};
  const Poly pi_plant = poly_mul({1.0, 0.0}, plant_den);
  const Poly pade{1.0, 3.0, 3.0};
  const Poly cascade = poly_mul(poly_mul(pi_plant, pade), {0.1597, 1.0, 0.0});
  for (const Poly& p : {plant_den, pi_plant, poly_mul(pi_plant, pade), cascade})
    for (const auto& r : poly_roots(p)) CHECK(poly_root_residual(p, r) < 1e-9);
}

TEST_CASE("root residuals stay small for random degree<=8 polys") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    Poly p(9);
    for (auto& c : p) c = coef(rng);
    if (std::abs(p[0]) < 0.1) p[0] = 1.0;
    // random coefficients can cluster roots; allow a looser bound there
    for (const auto& r : poly_roots(p)) CHECK(poly_root_residual(p, r) < 1e-7);
  }
}

TEST_CASE("poly_divmod quotient and remainder") {
  // (s^3 + 2s^2 + 3s + 4) / (s^2 + 1) = s + 2, rem 2s + 2
  Poly rem;
  const Poly quot = poly_divmod({1.0, 2.0, 3.0, 4.0}, {1.0, 0.0, 1.0}, rem);
  CHECK(quot == Poly{1.0, 2.0});
  REQUIRE(rem.size() == 2);
  CHECK(rem[0] == doctest::Approx(2.0));
  CHECK(rem[1] == doctest::Approx(2.0));
}
