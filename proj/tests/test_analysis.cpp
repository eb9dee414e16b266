#include "doctest.h"

#include <cmath>

#include "soro/lti/analysis.hpp"
#include "soro/lti/state_space.hpp"
#include "soro/sim/rk2.hpp"

using namespace soro::lti;

namespace {
TransferFunction bladder_plant() {
  const double kp = 1.0015, tz = -0.58354, tp1 = 100.0, tp2 = 9.7257, td = 2.0;
  return TransferFunction({kp * tz, kp}, {tp1 * tp2, tp1 + tp2, 1.0}, td);
}
}  // namespace

TEST_CASE("state-space realization reproduces the transfer function") {
  const TransferFunction g({2.0, 3.0}, {1.0, 4.0, 5.0});
  const StateSpace ss = StateSpace::from_tf(g);
  REQUIRE(ss.order() == 2);
  // H(jw) from (A,B,C,D) vs direct rational evaluation
  for (const double w : {0.0, 0.3, 1.0, 4.0}) {
    const std::complex<double> s(0.0, w);
    Eigen::MatrixXcd m = s * Eigen::MatrixXcd::Identity(2, 2) - ss.A.cast<std::complex<double>>();
    const Eigen::VectorXcd x = m.colPivHouseholderQr().solve(ss.B.cast<std::complex<double>>());
    const std::complex<double> h = (ss.C.cast<std::complex<double>>() * x)(0) + ss.D;
    CHECK(std::abs(h - g.eval(w)) < 1e-10);
  }
}

TEST_CASE("biproper realization has feedthrough") {
  // (s+2)/(s+1): D = 1
  const StateSpace ss = StateSpace::from_tf(TransferFunction({1.0, 2.0}, {1.0, 1.0}));
  CHECK(ss.D == doctest::Approx(1.0));
}

TEST_CASE("improper tf cannot be realized") {
  CHECK_THROWS_WITH_AS(StateSpace::from_tf(TransferFunction({1.0, 0.0, 0.0}, {1.0, 0.0})),
                       doctest::Contains("derivative filter"), std::invalid_argument);
}

TEST_CASE("step response of first-order lag matches 1-exp(-t)") {
  const auto series = step_response(TransferFunction({1.0}, {1.0, 1.0}), 5.0, 0.01);
  const std::size_t i1 = 100;  // t = 1
  CHECK(series.t[i1] == doctest::Approx(1.0));
  CHECK(series.y[i1] == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-3));
  CHECK(series.y.back() == doctest::Approx(1.0 - std::exp(-5.0)).epsilon(1e-3));
}

TEST_CASE("step response renders transport delay exactly") {
  const auto series = step_response(TransferFunction({1.0}, {1.0, 1.0}, 0.5), 4.0, 0.01);
  for (std::size_t i = 0; i < series.t.size(); ++i) {
    if (series.t[i] < 0.5) CHECK(series.y[i] == 0.0);
  }
  // After the delay, shifted first-order rise
  const std::size_t i15 = 150;  // t = 1.5 -> shifted t' = 1.0
  CHECK(series.y[i15] == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-3));
}

TEST_CASE("step response of the plant reaches its dc gain") {
  const auto series = step_response(bladder_plant(), 1000.0, 0.1);
  CHECK(series.y.back() == doctest::Approx(1.0015).epsilon(1e-3));
}

TEST_CASE("stable step converges to dc gain within 0.1% at long horizons") {
  const TransferFunction g({3.0}, {4.0, 5.0, 1.0});  // poles -1, -0.25; slowest tau 4 s
  const auto series = step_response(g, 40.0, 0.01);
  CHECK(series.y.back() == doctest::Approx(g.dc_gain()).epsilon(1e-3));
}

TEST_CASE("step metrics of a monotone first-order response") {
  const auto series = step_response(TransferFunction({1.0}, {1.0, 1.0}), 10.0, 0.001);
  const StepMetrics m = step_metrics(series);
  CHECK(m.overshoot == 0.0);
  CHECK(m.steady_state == doctest::Approx(1.0).epsilon(1e-3));
  // Analytic: t10 = ln(10/9), t90 = ln(10); rise = ln(9) = 2.197
  CHECK(m.rise_time == doctest::Approx(std::log(9.0)).epsilon(1e-2));
  // Settling: ln(50) = 3.912
  CHECK(m.settling_time == doctest::Approx(std::log(50.0)).epsilon(1e-2));
}

TEST_CASE("step metrics detect a delayed settle") {
  // Pure delay through a fast lag: settling is dominated by the 2 s delay
  const auto series = step_response(TransferFunction({1.0}, {0.05, 1.0}, 2.0), 20.0, 0.001);
  const StepMetrics m = step_metrics(series);
  CHECK(m.settling_time == doctest::Approx(2.0 + 0.05 * std::log(50.0)).epsilon(0.02));
}

TEST_CASE("non-convergent series is rejected") {
  TimeSeries ramp;
  for (int i = 0; i < 1000; ++i) {
    ramp.t.push_back(0.01 * i);
    ramp.y.push_back(0.01 * i);
  }
  CHECK_THROWS_WITH_AS(step_metrics(ramp), doctest::Contains("no steady state"),
                       std::runtime_error);
}

TEST_CASE("frequency response at the corner of a first-order lag") {
  const auto fr = freq_response(TransferFunction({1.0}, {1.0, 1.0}), {0.5, 1.0, 2.0});
  CHECK(fr.magnitude_db[1] == doctest::Approx(-3.0103).epsilon(1e-3));
  CHECK(fr.phase_deg[1] == doctest::Approx(-45.0).epsilon(1e-6));
}

TEST_CASE("pure delay phase") {
  const auto fr = freq_response(TransferFunction({1.0}, {1.0}, 2.0), {0.5, 1.0});
  CHECK(fr.magnitude_db[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fr.phase_deg[1] == doctest::Approx(-114.59156).epsilon(1e-5));
}

TEST_CASE("plant dc magnitude") {
  const auto fr = freq_response(bladder_plant(), {1e-6, 1e-5});
  CHECK(fr.magnitude_db[0] == doctest::Approx(20.0 * std::log10(1.0015)).epsilon(1e-4));
}

TEST_CASE("response of a product is the product of responses") {
  const TransferFunction a({1.0, 2.0}, {1.0, 0.7, 2.0}, 0.3);
  const TransferFunction b({5.0}, {1.0, 4.0}, 0.7);
  const auto grid = log_grid(1e-2, 1e2, 50);
  const auto fa = freq_response(a, grid);
  const auto fb = freq_response(b, grid);
  const auto fab = freq_response(series(a, b), grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(fab.magnitude_db[i] ==
          doctest::Approx(fa.magnitude_db[i] + fb.magnitude_db[i]).epsilon(1e-9));
}

TEST_CASE("evaluation at an imaginary-axis pole is rejected by name") {
  // resonator s^2 + 1 has poles at +-j; omega = 1 sits exactly on one
  CHECK_THROWS_WITH_AS(freq_response(TransferFunction({1.0}, {1.0, 0.0, 1.0}), {0.5, 1.0}),
                       doctest::Contains("omega=1.0"), std::invalid_argument);
  // integrator pole at the origin
  CHECK_THROWS_AS(freq_response(TransferFunction({1.0}, {1.0, 0.0}), {0.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("stability verdicts") {
  CHECK_FALSE(is_stable(TransferFunction({1.0}, {1.0, -1.0})).stable);
  const auto report = is_stable(bladder_plant());
  CHECK(report.stable);
  REQUIRE(report.poles.size() == 2);
  CHECK(report.poles[0].real() == doctest::Approx(-0.10282).epsilon(1e-4));
  CHECK(report.poles[1].real() == doctest::Approx(-0.01).epsilon(1e-6));
}

TEST_CASE("rk2 scalar step and convergence order") {
  const auto f = [](double x, double) { return -x; };
  CHECK(soro::sim::rk2_step(f, 1.0, 0.0, 0.1) == doctest::Approx(0.905));

  const auto integrate = [&](double dt) {
    double x = 1.0;
    const int steps = static_cast<int>(std::round(1.0 / dt));
    for (int i = 0; i < steps; ++i) x = soro::sim::rk2_step(f, x, i * dt, dt);
    return std::abs(x - std::exp(-1.0));
  };
  const double e1 = integrate(0.1);
  const double e2 = integrate(0.05);
  CHECK(e1 < 1e-3);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("rk2 rejects a non-finite derivative with a state snapshot") {
  const auto f = [](double x, double) { return x > 0.5 ? std::nan("") : 1.0; };
  CHECK_THROWS_WITH_AS(soro::sim::rk2_step(f, 1.0, 0.0, 0.1), doctest::Contains("state"),
                       std::runtime_error);
}
