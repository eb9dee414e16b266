#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "soro/control/loop.hpp"
#include "soro/control/pid.hpp"
#include "soro/lti/analysis.hpp"

using namespace soro::control;
using namespace soro::lti;

namespace {

TransferFunction bladder_plant() {
  const double kp = 1.0015, tz = -0.58354, tp1 = 100.0, tp2 = 9.7257, td = 2.0;
  return TransferFunction({kp * tz, kp}, {tp1 * tp2, tp1 + tp2, 1.0}, td);
}

const PiParams kPi{3.79, 0.0344};
const PidParams kPid{3.4993, 0.054765, 55.8988, 100.0};

}  // namespace

TEST_CASE("pi_tf forms") {
  const auto pi = pi_tf(kPi);
  const auto zpk = tf_to_zpk(pi);
  REQUIRE(zpk.zeros.size() == 1);
  CHECK(zpk.zeros[0].real() == doctest::Approx(-0.009077).epsilon(1e-3));

  CHECK(pi_tf({2.5, 0.0}).den == Poly{1.0});
  const auto integ = pi_tf({0.0, 1.0});
  CHECK(integ.num == Poly{1.0});  // leading zero trimmed
  CHECK(integ.den == Poly{1.0, 0.0});
}

TEST_CASE("pid_tf ideal and realized") {
  const auto ideal = pid_tf(kPid, false);
  CHECK(ideal.num == Poly{55.8988, 3.4993, 0.054765});
  CHECK(ideal.den == Poly{1.0, 0.0});
  CHECK_FALSE(ideal.is_proper());

  const auto pi_like = pid_tf({2.0, 0.5, 0.0, 100.0}, true);
  CHECK(poly_degree(pi_like.den) == 1);  // kd=0 reduces to PI

  const auto realized = pid_tf(kPid, true);
  CHECK(realized.is_proper());
  // Low-frequency behavior matches the ideal form below 0.1*n*kp/kd
  const double omega_ok = 0.1 * kPid.derivative_filter_n * kPid.kp / kPid.kd;
  for (double w = omega_ok / 20.0; w <= omega_ok; w *= 2.0) {
    const double ratio = std::abs(realized.eval(w)) / std::abs(ideal.eval(w));
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.01));
  }
}

TEST_CASE("realized pid converges to ideal as the filter constant grows") {
  const auto ideal = pid_tf(kPid, false);
  const auto grid = log_grid(1e-3, 5.0, 40);
  double prev_err = 1e300;
  for (const double n : {10.0, 100.0, 1000.0}) {
    PidParams p = kPid;
    p.derivative_filter_n = n;
    const auto realized = pid_tf(p, true);
    double err = 0.0;
    for (double w : grid) err = std::max(err, std::abs(realized.eval(w) - ideal.eval(w)) /
                                                  std::abs(ideal.eval(w)));
    CHECK(err < prev_err);
    prev_err = err;
  }
}

TEST_CASE("open loop matches the identified composite form") {
  const auto ol = build_open_loop(kPi, bladder_plant());
  const auto zpk = tf_to_zpk(ol);
  CHECK(zpk.gain == doctest::Approx(-0.00228).epsilon(0.01));
  CHECK(zpk.delay == 2.0);

  std::vector<double> zeros;
  for (const auto& z : zpk.zeros) zeros.push_back(z.real());
  std::sort(zeros.begin(), zeros.end());
  REQUIRE(zeros.size() == 2);
  CHECK(zeros[0] == doctest::Approx(-0.009073).epsilon(1e-3));
  CHECK(zeros[1] == doctest::Approx(1.7137).epsilon(1e-4));

  std::vector<double> poles;
  for (const auto& p : zpk.poles) poles.push_back(p.real());
  std::sort(poles.begin(), poles.end());
  REQUIRE(poles.size() == 3);
  CHECK(poles[0] == doctest::Approx(-0.1028).epsilon(1e-3));
  CHECK(poles[1] == doctest::Approx(-0.01).epsilon(1e-6));
  CHECK(poles[2] == doctest::Approx(0.0));
}

TEST_CASE("open loop equals series(pi, plant) exactly") {
  const auto via_op = build_open_loop(kPi, bladder_plant());
  const auto direct = series(pi_tf(kPi), bladder_plant());
  CHECK(via_op.num == direct.num);
  CHECK(via_op.den == direct.den);

  const auto flat = build_open_loop({2.0, 0.0}, TransferFunction({1.0}, {1.0}));
  CHECK(flat.num == Poly{2.0});
}

TEST_CASE("open loop has integrator slope at low frequency") {
  const auto ol = build_open_loop(kPi, bladder_plant());
  const auto grid = log_grid(1e-4, 1e-3, 10);
  const auto fr = freq_response(ol, grid);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double slope = (fr.magnitude_db[i] - fr.magnitude_db[i - 1]) /
                         (std::log10(grid[i]) - std::log10(grid[i - 1]));
    CHECK(slope == doctest::Approx(-20.0).epsilon(0.05));
  }
}

TEST_CASE("inner PI loop with Pade delay closes stable") {
  LoopTopology topo{kPid, kPi, bladder_plant(), DelayMode::Pade2};
  const auto net = build_cascade(topo);
  CHECK(net.inner_stable);
  CHECK(net.closed_stable);
  for (const auto& p : is_stable(net.inner_closed).poles) CHECK(p.real() < 0.0);
}

TEST_CASE("cascade closed loop tracks with the reported transient figures") {
  LoopTopology topo{kPid, kPi, bladder_plant(), DelayMode::Pade2};
  const auto net = build_cascade(topo);
  // Integrators force exact unity tracking in the limit
  CHECK(net.closed_loop.dc_gain() == doctest::Approx(1.0).epsilon(1e-3));

  // Transient figures are quoted on the window the response plateaus in;
  // a small slow tail (~15% dip recovering over minutes) sits beyond it.
  const auto series = step_response(net.closed_loop, 30.0, 0.01);
  const auto m = step_metrics(series);
  CHECK(m.rise_time_to_90 == doctest::Approx(6.29).epsilon(0.10));
  CHECK(m.settling_time == doctest::Approx(14.0).epsilon(0.15));
}

TEST_CASE("zero-gain controllers produce the zero system") {
  LoopTopology topo{PidParams{0.0, 0.0, 0.0, 100.0}, kPi, bladder_plant(), DelayMode::Pade2};
  const auto net = build_cascade(topo);
  CHECK(net.closed_loop.is_zero());
}

TEST_CASE("exact delay mode has no rational closure") {
  LoopTopology topo{kPid, kPi, bladder_plant(), DelayMode::Exact};
  CHECK_THROWS_AS(build_cascade(topo), std::invalid_argument);
}

TEST_CASE("pade and exact frequency responses agree below 1/(2 Td)") {
  const auto ol_exact = build_open_loop(kPi, bladder_plant());
  const auto ol_pade = substitute_pade(ol_exact, 2);
  const auto grid = log_grid(1e-3, 1.0 / (2.0 * 2.0), 30);
  const auto fe = freq_response(ol_exact, grid);
  const auto fp = freq_response(ol_pade, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(fe.magnitude_db[i] - fp.magnitude_db[i]) < 1.0);
    CHECK(std::abs(fe.phase_deg[i] - fp.phase_deg[i]) < 5.0);
  }
}
