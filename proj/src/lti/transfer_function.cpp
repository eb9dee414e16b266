#include "soro/lti/transfer_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace soro::lti {

TransferFunction::TransferFunction(Poly numerator, Poly denominator, double transport_delay)
    : num(poly_trim(std::move(numerator))),
      den(poly_trim(std::move(denominator))),
      delay(transport_delay) {
  if (den.empty() || den[0] == 0.0)
    throw std::invalid_argument("TransferFunction: denominator leading coefficient is zero");
  if (delay < 0.0) throw std::invalid_argument("TransferFunction: negative delay");
}

int TransferFunction::relative_degree() const {
  return poly_degree(den) - poly_degree(num);
}

bool TransferFunction::is_proper() const { return relative_degree() >= 0; }

bool TransferFunction::is_zero() const {
  return std::all_of(num.begin(), num.end(), [](double c) { return c == 0.0; });
}

double TransferFunction::dc_gain() const {
  const double d0 = den.back();
  if (d0 == 0.0) return std::numeric_limits<double>::infinity();
  return num.back() / d0;
}

std::complex<double> TransferFunction::eval(double omega) const {
  const std::complex<double> s(0.0, omega);
  return poly_eval(num, s) / poly_eval(den, s) *
         std::exp(std::complex<double>(0.0, -omega * delay));
}

TransferFunction TransferFunction::normalized() const {
  const double lead = den[0];
  return TransferFunction(poly_scale(num, 1.0 / lead), poly_scale(den, 1.0 / lead), delay);
}

ZpkModel tf_to_zpk(const TransferFunction& tf) {
  ZpkModel out;
  out.delay = tf.delay;
  if (tf.is_zero()) return out;  // explicit zero system
  out.zeros = poly_roots(tf.num);
  out.poles = poly_roots(tf.den);
  out.gain = poly_trim(tf.num)[0] / tf.den[0];
  return out;
}

TransferFunction zpk_to_tf(const ZpkModel& zpk) {
  if (zpk.gain == 0.0) return TransferFunction({0.0}, poly_from_roots(zpk.poles), zpk.delay);
  return TransferFunction(poly_from_roots(zpk.zeros, zpk.gain), poly_from_roots(zpk.poles),
                          zpk.delay);
}

TransferFunction series(const TransferFunction& a, const TransferFunction& b) {
  return TransferFunction(poly_mul(a.num, b.num), poly_mul(a.den, b.den), a.delay + b.delay);
}

TransferFunction feedback_unity(const TransferFunction& open_loop) {
  if (open_loop.delay != 0.0)
    throw std::invalid_argument(
        "feedback_unity: open loop carries a transport delay; substitute a Pade "
        "factor first (substitute_pade) or evaluate in the frequency domain");
  if (open_loop.is_zero()) return TransferFunction({0.0}, {1.0});
  const int dn = poly_degree(open_loop.num);
  const int dd = poly_degree(open_loop.den);
  if (dn > dd)
    throw std::invalid_argument("feedback_unity: improper open loop (deg num " +
                                std::to_string(dn) + " > deg den " + std::to_string(dd) + ")");
  return TransferFunction(open_loop.num, poly_add(open_loop.den, open_loop.num), 0.0);
}

TransferFunction pade_delay(double delay, int order) {
  if (delay <= 0.0) throw std::invalid_argument("pade_delay: delay must be positive");
  if (order < 1) throw std::invalid_argument("pade_delay: order must be >= 1");
  const int q = order;
  // Integer-valued coefficient table C_k = (2q-k)! / (k! (q-k)!), k = 0..q.
  std::vector<double> c(static_cast<std::size_t>(q) + 1);
  for (int k = 0; k <= q; ++k) {
    double v = 1.0;
    for (int j = 1; j <= 2 * q - k; ++j) v *= j;
    for (int j = 1; j <= k; ++j) v /= j;
    for (int j = 1; j <= q - k; ++j) v /= j;
    c[static_cast<std::size_t>(k)] = v;
  }
  // num(s) = sum c_k (-T s)^k, den(s) = sum c_k (T s)^k, stored descending.
  Poly num(static_cast<std::size_t>(q) + 1), den(static_cast<std::size_t>(q) + 1);
  for (int k = 0; k <= q; ++k) {
    const double tk = std::pow(delay, k) * c[static_cast<std::size_t>(k)];
    num[static_cast<std::size_t>(q - k)] = (k % 2 == 0) ? tk : -tk;
    den[static_cast<std::size_t>(q - k)] = tk;
  }
  const double lead = den[0];
  return TransferFunction(poly_scale(num, 1.0 / lead), poly_scale(den, 1.0 / lead), 0.0);
}

TransferFunction substitute_pade(const TransferFunction& tf, int order) {
  if (tf.delay == 0.0) return tf;
  const TransferFunction pade = pade_delay(tf.delay, order);
  return TransferFunction(poly_mul(tf.num, pade.num), poly_mul(tf.den, pade.den), 0.0);
}

TransferFunction minreal(const TransferFunction& tf, double tol) {
  ZpkModel zpk = tf_to_zpk(tf);
  if (zpk.gain == 0.0) return tf;
  std::vector<bool> pole_used(zpk.poles.size(), false);
  std::vector<std::complex<double>> kept_zeros;
  for (const auto& z : zpk.zeros) {
    std::size_t match = zpk.poles.size();
    double best = tol;
    for (std::size_t j = 0; j < zpk.poles.size(); ++j) {
      if (pole_used[j]) continue;
      const double d = std::abs(z - zpk.poles[j]);
      if (d <= best) {
        best = d;
        match = j;
      }
    }
    if (match < zpk.poles.size())
      pole_used[match] = true;
    else
      kept_zeros.push_back(z);
  }
  std::vector<std::complex<double>> kept_poles;
  for (std::size_t j = 0; j < zpk.poles.size(); ++j)
    if (!pole_used[j]) kept_poles.push_back(zpk.poles[j]);
  ZpkModel reduced{std::move(kept_zeros), std::move(kept_poles), zpk.gain, zpk.delay};
  return zpk_to_tf(reduced);
}

std::string to_string(const TransferFunction& tf) {
  auto poly_str = [](const Poly& p) {
    std::ostringstream os;
    const int n = static_cast<int>(p.size()) - 1;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double c = p[i];
      if (c == 0.0 && p.size() > 1) continue;
      const int pw = n - static_cast<int>(i);
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      os << std::abs(c);
      if (pw == 1) os << "*s";
      else if (pw > 1) os << "*s^" << pw;
    }
    if (first) os << "0";
    return os.str();
  };
  std::ostringstream os;
  os << "(" << poly_str(tf.num) << ") / (" << poly_str(tf.den) << ")";
  if (tf.delay > 0.0) os << " * exp(-" << tf.delay << "*s)";
  return os.str();
}

}  // namespace soro::lti
