#include "soro/lti/state_space.hpp"

#include <stdexcept>

namespace soro::lti {

StateSpace StateSpace::from_tf(const TransferFunction& tf) {
  if (!tf.is_proper())
    throw std::invalid_argument(
        "StateSpace::from_tf: improper transfer function (deg num > deg den); "
        "add a derivative filter to make it realizable");
  const TransferFunction h = tf.normalized();
  const int n = poly_degree(h.den);

  StateSpace ss;
  if (n == 0) {
    ss.A.resize(0, 0);
    ss.B.resize(0);
    ss.C.resize(0);
    ss.D = h.num.back() / h.den.back();
    return ss;
  }

  // Monic denominator s^n + a1 s^(n-1) + ... + an; numerator padded to
  // b0 s^n + ... + bn.  D = b0, C_i = b_i - a_i*b0.
  Poly b(static_cast<std::size_t>(n) + 1, 0.0);
  const std::size_t offset = b.size() - h.num.size();
  for (std::size_t i = 0; i < h.num.size(); ++i) b[offset + i] = h.num[i];

  ss.A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) ss.A(0, i) = -h.den[static_cast<std::size_t>(i) + 1];
  for (int i = 1; i < n; ++i) ss.A(i, i - 1) = 1.0;
  ss.B = Eigen::VectorXd::Zero(n);
  ss.B(0) = 1.0;
  ss.C.resize(n);
  ss.D = b[0];
  for (int i = 0; i < n; ++i)
    ss.C(i) = b[static_cast<std::size_t>(i) + 1] - h.den[static_cast<std::size_t>(i) + 1] * ss.D;
  return ss;
}

}  // namespace soro::lti
