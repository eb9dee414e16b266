#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "soro/lti/transfer_function.hpp"

using namespace soro::lti;

namespace {

// Identified bladder plant: 1.0015 (1 - 0.58354 s) / ((1+100s)(1+9.7257s)), 2 s dead time.
TransferFunction bladder_plant() {
  const double kp = 1.0015, tz = -0.58354, tp1 = 100.0, tp2 = 9.7257, td = 2.0;
  return TransferFunction({kp * tz, kp}, {tp1 * tp2, tp1 + tp2, 1.0}, td);
}

std::vector<double> sorted_reals(const std::vector<std::complex<double>>& v) {
  std::vector<double> out;
  for (const auto& c : v) out.push_back(c.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("zpk of the identified plant") {
  const ZpkModel zpk = tf_to_zpk(bladder_plant());
  REQUIRE(zpk.zeros.size() == 1);
  REQUIRE(zpk.poles.size() == 2);
  CHECK(zpk.zeros[0].real() == doctest::Approx(1.7137).epsilon(1e-4));
  const auto poles = sorted_reals(zpk.poles);
  CHECK(poles[0] == doctest::Approx(-0.10282).epsilon(1e-4));
  CHECK(poles[1] == doctest::Approx(-0.01).epsilon(1e-6));
  CHECK(zpk.gain == doctest::Approx(-6.006e-4).epsilon(0.005));
  CHECK(zpk.delay == 2.0);
}

TEST_CASE("zpk trivial cases") {
  const ZpkModel lag = tf_to_zpk(TransferFunction({1.0}, {1.0, 1.0}));
  CHECK(lag.zeros.empty());
  REQUIRE(lag.poles.size() == 1);
  CHECK(lag.poles[0].real() == doctest::Approx(-1.0));
  CHECK(lag.gain == doctest::Approx(1.0));

  const ZpkModel two = tf_to_zpk(TransferFunction({2.0, 2.0}, {1.0, 3.0, 2.0}));
  REQUIRE(two.zeros.size() == 1);
  CHECK(two.zeros[0].real() == doctest::Approx(-1.0).epsilon(1e-12));
  const auto poles = sorted_reals(two.poles);
  CHECK(poles[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(poles[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(two.gain == doctest::Approx(2.0));
}

TEST_CASE("zpk of the zero system is explicit, not an error") {
  const ZpkModel z = tf_to_zpk(TransferFunction({0.0}, {1.0, 1.0}));
  CHECK(z.zeros.empty());
  CHECK(z.gain == 0.0);
}

TEST_CASE("tf->zpk->tf round trip preserves coefficients within 1e-9") {
  const TransferFunction g = bladder_plant().normalized();
  const TransferFunction back = zpk_to_tf(tf_to_zpk(g)).normalized();
  REQUIRE(back.num.size() == g.num.size());
  REQUIRE(back.den.size() == g.den.size());
  for (std::size_t i = 0; i < g.num.size(); ++i)
    CHECK(back.num[i] == doctest::Approx(g.num[i]).epsilon(1e-9));
  for (std::size_t i = 0; i < g.den.size(); ++i)
    CHECK(back.den[i] == doctest::Approx(g.den[i]).epsilon(1e-9));
}

TEST_CASE("series composition") {
  const TransferFunction g = bladder_plant();
  const TransferFunction one({1.0}, {1.0});
  const TransferFunction gi = series(g, one);
  CHECK(gi.num == g.num);
  CHECK(gi.den == g.den);
  CHECK(gi.delay == g.delay);

  SUBCASE("delays add") {
    const TransferFunction a({1.0}, {1.0}, 2.0), b({1.0}, {1.0}, 0.5);
    CHECK(series(a, b).delay == doctest::Approx(2.5));
  }

  SUBCASE("associative up to coefficient tolerance") {
    const TransferFunction a({1.0, 2.0}, {1.0, 0.5, 1.0});
    const TransferFunction b({3.0}, {1.0, 4.0});
    const TransferFunction c({1.0, 0.0}, {2.0, 1.0});
    const auto left = series(series(a, b), c);
    const auto right = series(a, series(b, c));
    REQUIRE(left.num.size() == right.num.size());
    for (std::size_t i = 0; i < left.num.size(); ++i)
      CHECK(left.num[i] == doctest::Approx(right.num[i]).epsilon(1e-12));
    for (std::size_t i = 0; i < left.den.size(); ++i)
      CHECK(left.den[i] == doctest::Approx(right.den[i]).epsilon(1e-12));
  }
}

TEST_CASE("feedback_unity") {
  SUBCASE("integrator closes to first-order lag") {
    const TransferFunction cl = feedback_unity(TransferFunction({1.0}, {1.0, 0.0}));
    CHECK(cl.num == Poly{1.0});
    CHECK(cl.den == Poly{1.0, 1.0});
  }
  SUBCASE("zero open loop closes to zero") {
    CHECK(feedback_unity(TransferFunction({0.0}, {1.0, 1.0})).is_zero());
  }
  SUBCASE("improper open loop is rejected with degrees named") {
    CHECK_THROWS_WITH_AS(feedback_unity(TransferFunction({1.0, 0.0, 0.0}, {1.0, 1.0})),
                         doctest::Contains("deg num 2"), std::invalid_argument);
  }
  SUBCASE("delayed open loop is rejected") {
    CHECK_THROWS_AS(feedback_unity(TransferFunction({1.0}, {1.0, 0.0}, 1.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("pade_delay(2,2) is exactly (s^2-3s+3)/(s^2+3s+3)") {
  const TransferFunction pade = pade_delay(2.0, 2);
  REQUIRE(pade.num.size() == 3);
  CHECK(pade.num[0] == 1.0);
  CHECK(pade.num[1] == -3.0);
  CHECK(pade.num[2] == 3.0);
  CHECK(pade.den[0] == 1.0);
  CHECK(pade.den[1] == 3.0);
  CHECK(pade.den[2] == 3.0);
}

TEST_CASE("pade properties: DC match and all-pass") {
  for (const double delay : {0.4, 1.0, 2.0, 3.7}) {
    for (const int order : {1, 2, 3}) {
      const TransferFunction pade = pade_delay(delay, order);
      CHECK(pade.dc_gain() == doctest::Approx(1.0).epsilon(1e-12));
      for (int i = 0; i < 100; ++i) {
        const double omega = 0.01 + 0.25 * i;
        CHECK(std::abs(pade.eval(omega)) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
  CHECK(std::abs(pade_delay(2.0, 2).eval(0.7)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(pade_delay(0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(pade_delay(-1.0, 2), std::invalid_argument);
}

TEST_CASE("substitute_pade clears the delay and matches at low frequency") {
  const TransferFunction g = bladder_plant();
  const TransferFunction rational = substitute_pade(g, 2);
  CHECK(rational.delay == 0.0);
  // Good agreement well below 1/Td
  const auto exact = g.eval(0.05);
  const auto approx = rational.eval(0.05);
  CHECK(std::abs(exact - approx) < 1e-4 * std::abs(exact) + 1e-12);
}

TEST_CASE("minreal cancels only within tolerance") {
  // (s+1)(s+2)/[(s+1.00000001)(s+3)]
  const TransferFunction g(poly_mul({1.0, 1.0}, {1.0, 2.0}),
                           poly_mul({1.0, 1.00000001}, {1.0, 3.0}));
  const TransferFunction reduced = minreal(g, 1e-6);
  CHECK(poly_degree(reduced.den) == 1);

  // The deliberate near-cancelling pair of the PI loop (zero -0.009073 vs
  // pole -0.01) must survive the default tolerance.
  const TransferFunction loop(poly_mul({1.0, 0.009073}, {1.0}), poly_mul({1.0, 0.01}, {1.0, 0.0}));
  const TransferFunction kept = minreal(loop);
  CHECK(poly_degree(kept.den) == 2);
}

TEST_CASE("dc gain and properness") {
  CHECK(bladder_plant().dc_gain() == doctest::Approx(1.0015));
  CHECK(bladder_plant().is_proper());
  CHECK_FALSE(TransferFunction({1.0, 0.0, 0.0}, {1.0, 0.0}).is_proper());
}
