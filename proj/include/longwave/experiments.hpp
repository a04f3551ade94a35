#pragma once

// Convergence studies: error against a fine-step reference for grids of
// (method, eps, tau), typically on the long horizon T = 1/eps.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "longwave/models.hpp"
#include "longwave/spectral.hpp"
#include "longwave/stepping.hpp"

namespace longwave {

enum class TFinalRule { fixed, inverse_epsilon };

enum class InitialCondition {
  standard,  ///< 1/2 + sin(x) / (2 + cos(x))
  cosine,    ///< cos(x)
};

InitialCondition parse_initial_condition(std::string_view name);

struct ExperimentPlan {
  std::string model = "bbm";
  std::vector<double> epsilons;
  std::vector<double> taus;
  std::vector<Method> methods{Method::lwp1};
  int n_modes = 128;
  TFinalRule t_final_rule = TFinalRule::inverse_epsilon;
  double t_final = 1.0;  ///< used with TFinalRule::fixed
  InitialCondition initial = InitialCondition::standard;
  /// Reference step is min(taus) / reference_divisor; must be >= 50.
  double reference_divisor = 50.0;
  /// Drop the nonlinearity (g_q = 0); every method is then exact.
  bool linear = false;
  int jobs = 1;

  double horizon(double epsilon) const;
  double reference_tau() const;
  DispersiveModel make_model(double epsilon) const;
};

/// Throws InputError naming the first violated invariant (e.g. a tau that
/// does not divide the horizon).
void validate_plan(const ExperimentPlan& plan);

/// round(t_final / tau), throwing InputError if |n tau - T| > 1e-9 T.
std::size_t step_count(double t_final, double tau);

SpectrumState default_initial_condition(const SpectralGrid& grid);
SpectrumState make_initial_condition(InitialCondition which, const SpectralGrid& grid);

/// Tail diagnostic: max |u_hat[k]| over the outer third of the retained band.
double resolution_tail(const SpectrumState& state);
inline constexpr double kResolutionTolerance = 1e-9;

struct ReferenceSolution {
  SpectrumState state;
  double tau;
  std::size_t n_steps;
  /// L2 distance between the Lawson-RK4 and LWP2 runs at the reference step.
  double cross_check;
  double tail;
  bool under_resolved;
};

/// Lawson-RK4 to the plan's horizon, cross-validated by LWP2 at the same step.
/// Throws ReferenceValidationError when the two disagree by more than 1e-6.
ReferenceSolution reference_solution(const ExperimentPlan& plan, double epsilon);

enum class RecordStatus { ok, under_resolved, failed };

struct ConvergenceRecord {
  std::string method;
  std::string model;
  double epsilon = 0.0;
  double tau = 0.0;
  int n_modes = 0;
  double t_final = 0.0;
  double l2_error = 0.0;
  double h1_error = 0.0;
  double mass_drift = 0.0;
  double wall_time_s = 0.0;
  RecordStatus status = RecordStatus::ok;
  /// Why a record was flagged; empty for clean records.
  std::string note;

  std::string key() const;
};

/// One record per (method, eps, tau), ordered by method (plan order), then eps
/// descending, then tau descending. Failing grid points yield flagged records
/// with NaN errors instead of aborting the sweep.
std::vector<ConvergenceRecord> run_sweep(const ExperimentPlan& plan);

/// Least-squares slope of log(error) against log(step) over all points.
double log_log_slope(std::span<const std::pair<double, double>> step_error);

/// Least-squares slope of log(l2_error) against log(tau) over the four
/// smallest step sizes with finite positive errors.
double fit_order(std::span<const ConvergenceRecord> records);

/// error(eps_{i+1}) / error(eps_i) with eps sorted descending at a common tau.
std::vector<double> epsilon_scaling(std::span<const ConvergenceRecord> records);

}  // namespace longwave
