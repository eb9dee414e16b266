#pragma once

#include <complex>
#include <string>
#include <vector>

#include "soro/lti/polynomial.hpp"

namespace soro::lti {

/// Continuous-time rational transfer function with a transport delay:
///   H(s) = num(s)/den(s) * exp(-s*delay).
/// Coefficients are descending powers of s. Immutable by convention; all
/// operations below return new values.
struct TransferFunction {
  Poly num{0.0};
  Poly den{1.0};
  double delay = 0.0;  // seconds, >= 0

  TransferFunction() = default;
  TransferFunction(Poly numerator, Poly denominator, double transport_delay = 0.0);

  int relative_degree() const;
  bool is_proper() const;    // deg num <= deg den
  bool is_zero() const;
  double dc_gain() const;    // num(0)/den(0); inf when den(0)==0

  /// num(jw)/den(jw) * exp(-jw*delay).
  std::complex<double> eval(double omega) const;

  /// Same num/den scaled so the leading denominator coefficient is 1.
  TransferFunction normalized() const;
};

/// Zero-pole-gain form; complex zeros/poles occur in conjugate pairs.
struct ZpkModel {
  std::vector<std::complex<double>> zeros;
  std::vector<std::complex<double>> poles;
  double gain = 0.0;
  double delay = 0.0;
};

/// Roots of num/den; gain is the ratio of leading coefficients. An all-zero
/// numerator yields the explicit zero system (no zeros, gain 0).
ZpkModel tf_to_zpk(const TransferFunction& tf);

TransferFunction zpk_to_tf(const ZpkModel& zpk);

/// Polynomial product composition; delays add. No implicit cancellation.
TransferFunction series(const TransferFunction& a, const TransferFunction& b);

/// G/(1+G) for a rational G (delay must be zero; substitute a Pade factor
/// first with `substitute_pade`). Throws when the open loop is improper,
/// naming the offending degrees.
TransferFunction feedback_unity(const TransferFunction& open_loop);

/// Diagonal [order/order] Pade approximant of exp(-s*delay). All-pass,
/// unity at DC. Requires delay > 0, order >= 1.
TransferFunction pade_delay(double delay, int order);

/// Replaces the transport delay with its Pade factor; result has delay 0.
/// A zero-delay input is returned unchanged.
TransferFunction substitute_pade(const TransferFunction& tf, int order = 2);

/// Cancels zero/pole pairs closer than `tol`. The default keeps the
/// near-cancelling pairs this plant family produces (e.g. a PI zero a few
/// 1e-4 away from a plant pole survives tol 1e-8).
TransferFunction minreal(const TransferFunction& tf, double tol = 1e-8);

std::string to_string(const TransferFunction& tf);

}  // namespace soro::lti
