#pragma once

#include <Eigen/Dense>

#include "soro/lti/transfer_function.hpp"

namespace soro::lti {

/// Controllable canonical realization of the rational part of a proper
/// transfer function (the transport delay is the caller's concern).
///   x' = A x + B u,  y = C x + D u
struct StateSpace {
  Eigen::MatrixXd A;
  Eigen::VectorXd B;
  Eigen::RowVectorXd C;
  double D = 0.0;

  int order() const { return static_cast<int>(A.rows()); }

  double output(const Eigen::VectorXd& x, double u) const {
    return (order() == 0) ? D * u : C * x + D * u;
  }

  Eigen::VectorXd deriv(const Eigen::VectorXd& x, double u) const {
    return A * x + B * u;
  }

  /// Throws for an improper tf, directing the caller to add a derivative
  /// filter (an ideal PID is the usual offender).
  static StateSpace from_tf(const TransferFunction& tf);
};

}  // namespace soro::lti
