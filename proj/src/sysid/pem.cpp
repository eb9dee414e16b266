#include "soro/sysid/pem.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "soro/lti/state_space.hpp"
#include "soro/sim/plant_sim.hpp"

namespace soro::sysid {

namespace {

constexpr int kFreeParams = 5;  // kp, tz, tp1, tp2, td

// Nonlinear shape parameters; the gain, the two initial-condition states,
// and an offset+ramp nuisance pair are linear in the output and solved
// exactly per shape (separable least squares). The initial conditions keep
// records that start mid-cycle unbiased; the offset/ramp absorbs what
// linear detrending removed from y but not from the model's response to
// the detrended u.
struct Shape {
  double tz, tp1, tp2;
};

struct ShapeFit {
  double kp = 0.0;
  Eigen::Vector2d x0 = Eigen::Vector2d::Zero();
  double sse = std::numeric_limits<double>::infinity();
};

lti::StateSpace realize(const Shape& s) {
  const lti::TransferFunction g({s.tz, 1.0}, {s.tp1 * s.tp2, s.tp1 + s.tp2, 1.0});
  return lti::StateSpace::from_tf(g);
}

ShapeFit solve_linear(const Shape& s, const DatasetZN& z, int delay_steps,
                      std::vector<double>* residual_out = nullptr) try {
  const lti::StateSpace ss = realize(s);
  const std::size_t n = z.size();
  const std::vector<double> zeros(n, 0.0);

  // Unit-gain forced response plus the two initial-condition responses.
  const auto forced = sim::simulate_lti(ss, z.u.samples, z.dt(), delay_steps);
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(2), e2 = Eigen::VectorXd::Zero(2);
  e1(0) = 1.0;
  e2(1) = 1.0;
  const auto ic1 = sim::simulate_lti(ss, zeros, z.dt(), 0, e1);
  const auto ic2 = sim::simulate_lti(ss, zeros, z.dt(), 0, e2);

  using Vec5 = Eigen::Matrix<double, 5, 1>;
  using Mat5 = Eigen::Matrix<double, 5, 5>;
  Mat5 normal = Mat5::Zero();
  Vec5 rhs = Vec5::Zero();
  const double nd = static_cast<double>(n);
  auto basis_row = [&](std::size_t i) {
    Vec5 row;
    row << forced[i], ic1[i], ic2[i], 1.0, static_cast<double>(i + 1) / nd;
    return row;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Vec5 row = basis_row(i);
    normal += row * row.transpose();
    rhs += row * z.y.samples[i];
  }
  normal.diagonal() += Vec5::Constant(1e-12);
  const Vec5 beta = normal.ldlt().solve(rhs);

  ShapeFit fit;
  fit.kp = beta(0);
  fit.x0 = beta.segment<2>(1);
  double sse = 0.0;
  if (residual_out) residual_out->resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = z.y.samples[i] - basis_row(i).dot(beta);
    sse += r * r;
    if (residual_out) (*residual_out)[i] = r;
  }
  fit.sse = std::isfinite(sse) ? sse : std::numeric_limits<double>::infinity();
  return fit;
} catch (const std::exception&) {
  // Stiff or otherwise sick trial shapes are rejected, not fatal; the
  // optimizer treats an infinite SSE like any other losing step.
  if (residual_out) residual_out->assign(z.size(), 0.0);
  return ShapeFit{};
}

struct Candidate {
  Shape shape{0.0, 1.0, 1.0};
  ShapeFit fit;
};

Candidate grid_seed(const DatasetZN& z, int delay_steps, kernels::Exec exec) {
  static const std::vector<double> tz_grid{-5.0, -2.0, -1.0, -0.5, -0.2, 0.0,
                                           0.2,  0.5,  1.0,  2.0,  5.0};
  static const std::vector<double> tp1_grid{2.0, 5.0, 10.0, 20.0, 50.0, 100.0, 200.0, 500.0};
  static const std::vector<double> tp2_grid{0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0};

  std::vector<Candidate> combos;
  for (double tz : tz_grid)
    for (double tp1 : tp1_grid)
      for (double tp2 : tp2_grid)
        if (tp2 <= tp1) combos.push_back({{tz, tp1, tp2}, {}});

  const bool parallel = (exec == kernels::Exec::Parallel);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long ci = 0; ci < static_cast<long>(combos.size()); ++ci) {
    Candidate& c = combos[static_cast<std::size_t>(ci)];
    c.fit = solve_linear(c.shape, z, delay_steps);
  }

  // Serial argmin keeps the winner independent of thread scheduling.
  std::size_t best = 0;
  for (std::size_t i = 1; i < combos.size(); ++i)
    if (combos[i].fit.sse < combos[best].fit.sse) best = i;
  return combos[best];
}

struct RefineResult {
  Candidate c;
  int iterations = 0;
  bool converged = false;
};

// Damped Gauss-Newton over (tz, tp1, tp2) with the linear parameters
// projected out at every evaluation; forward-difference Jacobian.
RefineResult refine(const DatasetZN& z, int delay_steps, Candidate seed, int max_iterations) {
  const std::size_t n = z.size();
  // RK2 needs |pole|*dt below ~2; stay well inside.
  const double tp_floor = 0.6 * z.dt();

  auto clamp_shape = [&](Shape s) {
    s.tp1 = std::max(s.tp1, tp_floor);
    s.tp2 = std::max(s.tp2, tp_floor);
    return s;
  };

  Shape shape = clamp_shape(seed.shape);
  std::vector<double> residual;
  ShapeFit fit = solve_linear(shape, z, delay_steps, &residual);

  RefineResult out;
  double lambda = 1e-3;
  int stall = 0;
  for (out.iterations = 0; out.iterations < max_iterations; ++out.iterations) {
    Eigen::MatrixXd jac(n, 3);
    const double* base = residual.data();
    for (int j = 0; j < 3; ++j) {
      Shape bumped = shape;
      double* field = (j == 0) ? &bumped.tz : (j == 1) ? &bumped.tp1 : &bumped.tp2;
      const double step = 1e-4 * std::max(std::abs(*field), 1e-2);
      *field += step;
      std::vector<double> r_bumped;
      solve_linear(clamp_shape(bumped), z, delay_steps, &r_bumped);
      for (std::size_t i = 0; i < n; ++i)
        jac(static_cast<long>(i), j) = (r_bumped[i] - base[i]) / step;
    }

    const Eigen::Matrix3d jtj = jac.transpose() * jac;
    Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < n; ++i)
      jtr -= jac.row(static_cast<long>(i)).transpose() * residual[i];

    bool accepted = false;
    for (int attempt = 0; attempt < 8 && !accepted; ++attempt) {
      Eigen::Matrix3d damped = jtj;
      damped.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-12);
      const Eigen::Vector3d delta = damped.ldlt().solve(jtr);
      const Shape trial =
          clamp_shape({shape.tz + delta(0), shape.tp1 + delta(1), shape.tp2 + delta(2)});
      std::vector<double> r_trial;
      const ShapeFit fit_trial = solve_linear(trial, z, delay_steps, &r_trial);
      if (fit_trial.sse < fit.sse) {
        const double rel_drop = (fit.sse - fit_trial.sse) / std::max(fit.sse, 1e-300);
        shape = trial;
        fit = fit_trial;
        residual = std::move(r_trial);
        lambda = std::max(lambda / 3.0, 1e-12);
        accepted = true;
        stall = (rel_drop < 1e-11) ? stall + 1 : 0;
      } else {
        lambda *= 10.0;
      }
    }
    if (!accepted) ++stall;
    if (stall >= 2) {
      out.converged = true;
      break;
    }
  }

  out.c = {shape, fit};
  return out;
}

FitReport make_report(const DatasetZN& z, double sse, int iterations, bool converged) {
  const double n = static_cast<double>(z.size());
  FitReport report;
  report.sse = sse;
  report.mse = sse / n;
  report.fpe = report.mse * (1.0 + kFreeParams / n) / (1.0 - kFreeParams / n);
  const double mean = z.y.mean();
  double dev = 0.0;
  for (double v : z.y.samples) dev += (v - mean) * (v - mean);
  report.fit_percent = (dev > 0.0) ? 100.0 * (1.0 - std::sqrt(sse / dev)) : 0.0;
  report.iterations = iterations;
  report.converged = converged;
  return report;
}

}  // namespace

std::vector<double> simulate_model(const ProcessModel& model, const DatasetZN& z) {
  model.validate();
  const int delay_steps = static_cast<int>(std::lround(model.td / z.dt()));
  const lti::TransferFunction g({model.kp * model.tz, model.kp},
                                {model.tp1 * model.tp2, model.tp1 + model.tp2, 1.0});
  return sim::simulate_lti(lti::StateSpace::from_tf(g), z.u.samples, z.dt(), delay_steps);
}

std::pair<ProcessModel, FitReport> fit_process_model(const DatasetZN& z,
                                                     const FitOptions& options) {
  z.validate();
  const double dt = z.dt();

  // The estimator expects detrended data.
  for (const auto* rec : {&z.u, &z.y}) {
    if (std::abs(rec->mean()) > 0.05 * rec->rms() + 1e-12)
      throw std::invalid_argument(
          "fit_process_model: data is not detrended (remove means and trends first)");
  }

  std::vector<double> delays = options.delay_candidates;
  if (delays.empty())
    for (double td = 0.0; td <= 4.0 + 1e-9; td += dt) delays.push_back(td);

  std::vector<int> steps(delays.size());
  for (std::size_t i = 0; i < delays.size(); ++i)
    steps[i] = std::max(0, static_cast<int>(std::lround(delays[i] / dt)));

  // The SSE surface moves slowly with the dead time, so a few grid probes
  // seed every candidate's refinement instead of one grid per candidate.
  std::vector<std::size_t> probe_idx{0};
  if (delays.size() > 2) probe_idx.push_back(delays.size() / 2);
  if (delays.size() > 1) probe_idx.push_back(delays.size() - 1);
  std::vector<Candidate> probe_seed(delays.size());
  std::vector<bool> is_probe(delays.size(), false);
  for (std::size_t pi : probe_idx) {
    probe_seed[pi] = grid_seed(z, steps[pi], options.exec);
    is_probe[pi] = true;
  }
  auto nearest_probe = [&](std::size_t i) {
    std::size_t best_p = probe_idx[0];
    for (std::size_t pi : probe_idx)
      if (std::llabs(static_cast<long long>(pi) - static_cast<long long>(i)) <
          std::llabs(static_cast<long long>(best_p) - static_cast<long long>(i)))
        best_p = pi;
    return best_p;
  };

  std::vector<RefineResult> results(delays.size());
  const bool parallel = (options.exec == kernels::Exec::Parallel);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < static_cast<long>(delays.size()); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const Candidate seed = is_probe[idx] ? probe_seed[idx] : probe_seed[nearest_probe(idx)];
    results[idx] = refine(z, steps[idx], seed, options.max_iterations);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].c.fit.sse < results[best].c.fit.sse) best = i;

  const auto& win = results[best];
  ProcessModel model{win.c.fit.kp, win.c.shape.tz, win.c.shape.tp1, win.c.shape.tp2,
                     steps[best] * dt};
  if (model.tp2 > model.tp1) std::swap(model.tp1, model.tp2);  // canonical order
  FitReport report = make_report(z, win.c.fit.sse, win.iterations, win.converged);
  if (!report.converged)
    throw NonConvergenceError("fit_process_model: no convergence after " +
                                  std::to_string(options.max_iterations) + " iterations",
                              model, report);
  return {model, report};
}

FitReport compute_metrics(const DatasetZN& z, const ProcessModel& model) {
  z.validate();
  if (z.size() <= kFreeParams)
    throw std::invalid_argument("compute_metrics: N must exceed the parameter count");
  const auto yhat = simulate_model(model, z);
  double sse = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double d = z.y.samples[i] - yhat[i];
    sse += d * d;
  }
  return make_report(z, sse, 0, true);
}

}  // namespace soro::sysid
