#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "soro/kernels/xcorr.hpp"
#include "soro/sysid/dataset.hpp"
#include "soro/sysid/process_model.hpp"

namespace soro::sysid {

struct FitReport {
  double fit_percent = 0.0;  // NRMSE form, <= 100
  double mse = 0.0;          // mean squared one-step error
  double fpe = 0.0;          // Akaike: V (1 + d/N)/(1 - d/N), d = 5
  double sse = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// The output-error predictor here never feeds back measured outputs, so
/// prediction- and simulation-focused error weighting coincide; the option
/// exists for config compatibility and forward evolution of the model set.
enum class FitFocus { Prediction, Simulation };

struct FitOptions {
  /// Dead-time candidates in seconds; snapped to the sample grid. Empty
  /// means {0, dt, 2dt, ..., 40dt} capped to 4 s.
  std::vector<double> delay_candidates;
  FitFocus focus = FitFocus::Prediction;
  int max_iterations = 80;
  kernels::Exec exec = kernels::default_exec();
};

/// Carries the best model found when the refinement hits the iteration cap.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, ProcessModel best, FitReport report)
      : std::runtime_error(what), best_model(best), best_report(report) {}
  ProcessModel best_model;
  FitReport best_report;
};

/// Prediction-error estimate of the process model: coarse grid seed over
/// (Tz, Tp1, Tp2) with the gain solved in closed form, then damped
/// Gauss-Newton per dead-time candidate; the best candidate wins. Call on
/// detrended data (near-zero means are asserted).
std::pair<ProcessModel, FitReport> fit_process_model(const DatasetZN& z,
                                                     const FitOptions& options = {});

/// Fit figures for a given model on a dataset.
FitReport compute_metrics(const DatasetZN& z, const ProcessModel& model);

/// Model output over the dataset input (zero initial state, exact sample
/// delay); shared by the estimator, metrics, and residual analysis.
std::vector<double> simulate_model(const ProcessModel& model, const DatasetZN& z);

}  // namespace soro::sysid
