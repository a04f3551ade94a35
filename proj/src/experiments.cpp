#include "longwave/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "longwave/error.hpp"

namespace longwave {

namespace {

constexpr double kCrossCheckTolerance = 1e-6;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Runs task(i) for i in [0, count) on `jobs` workers.
template <typename Task>
void parallel_for(std::size_t count, int jobs, Task&& task) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& t : pool) t.join();
}

bool finite_state(const SpectrumState& u) {
  for (const auto& c : u.coeffs()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

}  // namespace

InitialCondition parse_initial_condition(std::string_view name) {
  if (name == "standard") return InitialCondition::standard;
  if (name == "cosine") return InitialCondition::cosine;
  throw InputError("unknown initial condition '" + std::string(name) +
                   "' (expected standard or cosine)");
}

double ExperimentPlan::horizon(double epsilon) const {
  return t_final_rule == TFinalRule::inverse_epsilon ? 1.0 / epsilon : t_final;
}

double ExperimentPlan::reference_tau() const {
  return *std::min_element(taus.begin(), taus.end()) / reference_divisor;
}

DispersiveModel ExperimentPlan::make_model(double epsilon) const {
  auto m = builtin_model(model, epsilon);
  return linear ? linear_variant(std::move(m)) : m;
}

std::size_t step_count(double t_final, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw InputError("tau " + format_number(tau) + " must be positive and finite");
  }
  if (!(t_final > 0.0) || !std::isfinite(t_final)) {
    throw InputError("final time " + format_number(t_final) + " must be positive and finite");
  }
  const double n = std::round(t_final / tau);
  if (n < 1.0 || std::abs(n * tau - t_final) > 1e-9 * t_final) {
    throw InputError("tau " + format_number(tau) + " does not divide the final time " +
                     format_number(t_final));
  }
  return static_cast<std::size_t>(n);
}

void validate_plan(const ExperimentPlan& plan) {
  if (plan.epsilons.empty()) throw InputError("plan has no epsilon values");
  if (plan.taus.empty()) throw InputError("plan has no tau values");
  if (plan.methods.empty()) throw InputError("plan has no methods");
  if (plan.jobs < 1) throw InputError("jobs must be at least 1");
  if (!(plan.reference_divisor >= 50.0)) {
    throw InputError("reference divisor must be >= 50, got " + format_number(plan.reference_divisor));
  }
  SpectralGrid grid(plan.n_modes);
  for (double eps : plan.epsilons) {
    plan.make_model(eps);
    const double t_final = plan.horizon(eps);
    for (double tau : plan.taus) step_count(t_final, tau);
    step_count(t_final, plan.reference_tau());
  }
}

SpectrumState default_initial_condition(const SpectralGrid& grid) {
  auto x = grid.points();
  for (auto& v : x) v = 0.5 + std::sin(v) / (2.0 + std::cos(v));
  return forward_transform(x, grid);
}

SpectrumState make_initial_condition(InitialCondition which, const SpectralGrid& grid) {
  switch (which) {
    case InitialCondition::standard: return default_initial_condition(grid);
    case InitialCondition::cosine: {
      SpectrumState u(grid);
      u.set_mode(1, 0.5);
      return u;
    }
  }
  throw InputError("unhandled initial condition");
}

double resolution_tail(const SpectrumState& state) {
  return spectral_tail(state, 2 * state.grid().dealias_cutoff() / 3);
}

ReferenceSolution reference_solution(const ExperimentPlan& plan, double epsilon) {
  const SpectralGrid grid(plan.n_modes);
  const double t_final = plan.horizon(epsilon);
  const double tau = plan.reference_tau();
  const std::size_t n = step_count(t_final, tau);
  const StepContext ctx(plan.make_model(epsilon), grid, tau);
  const SpectrumState u0 = make_initial_condition(plan.initial, grid);

  SpectrumState rk4 = evolve(Method::lawson_rk4, u0, ctx, n);
  const SpectrumState partner = evolve(Method::lwp2, u0, ctx, n);
  const double gap = sobolev_norm(rk4 - partner, SobolevIndex(0.0));
  if (!(gap <= kCrossCheckTolerance)) {
    throw ReferenceValidationError("reference runs disagree at eps = " + format_number(epsilon) +
                                   ": |rk4 - lwp2| = " + format_number(gap));
  }
  const double tail = resolution_tail(rk4);
  return ReferenceSolution{std::move(rk4), tau, n, gap, tail, tail > kResolutionTolerance};
}

std::string ConvergenceRecord::key() const {
  return "method=" + method + " model=" + model + " epsilon=" + format_number(epsilon) +
         " tau=" + format_number(tau);
}

std::vector<ConvergenceRecord> run_sweep(const ExperimentPlan& plan) {
  validate_plan(plan);
  const SpectralGrid grid(plan.n_modes);
  const SpectrumState u0 = make_initial_condition(plan.initial, grid);
  const std::string model_name = plan.make_model(plan.epsilons.front()).name;

  std::vector<double> epsilons = plan.epsilons;
  std::sort(epsilons.begin(), epsilons.end(), std::greater<>());
  epsilons.erase(std::unique(epsilons.begin(), epsilons.end()), epsilons.end());
  std::vector<double> taus = plan.taus;
  std::sort(taus.begin(), taus.end(), std::greater<>());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

  struct RefSlot {
    std::optional<ReferenceSolution> solution;
    std::string failure;
  };
  std::vector<RefSlot> refs(epsilons.size());
  parallel_for(epsilons.size(), plan.jobs, [&](std::size_t i) {
    try {
      refs[i].solution = reference_solution(plan, epsilons[i]);
    } catch (const std::exception& e) {
      refs[i].failure = e.what();
    }
  });

  struct Job {
    Method method;
    std::size_t eps_index;
    double tau;
  };
  std::vector<Job> jobs;
  for (Method m : plan.methods) {
    for (std::size_t e = 0; e < epsilons.size(); ++e) {
      for (double tau : taus) jobs.push_back({m, e, tau});
    }
  }

  std::vector<ConvergenceRecord> records(jobs.size());
  parallel_for(jobs.size(), plan.jobs, [&](std::size_t i) {
    const Job& job = jobs[i];
    const double eps = epsilons[job.eps_index];
    ConvergenceRecord& rec = records[i];
    rec.method = std::string(method_name(job.method));
    rec.model = model_name;
    rec.epsilon = eps;
    rec.tau = job.tau;
    rec.n_modes = plan.n_modes;
    rec.t_final = plan.horizon(eps);

    auto fail = [&](std::string why) {
      rec.status = RecordStatus::failed;
      rec.note = std::move(why);
      rec.l2_error = rec.h1_error = rec.mass_drift = kNaN;
    };

    const auto& ref = refs[job.eps_index];
    if (!ref.solution) {
      fail("reference: " + ref.failure);
      return;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      const StepContext ctx(plan.make_model(eps), grid, job.tau);
      const SpectrumState u = evolve(job.method, u0, ctx, step_count(rec.t_final, job.tau));
      rec.wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (!finite_state(u)) {
        fail("solution blew up");
        return;
      }
      const SpectrumState diff = u - ref.solution->state;
      rec.l2_error = sobolev_norm(diff, SobolevIndex(0.0));
      rec.h1_error = sobolev_norm(diff, SobolevIndex(1.0));
      rec.mass_drift = std::abs(u.mean() - u0.mean());
      inverse_transform(u);  // realness to completion
    } catch (const std::exception& e) {
      rec.wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      fail(e.what());
      return;
    }
    if (ref.solution->under_resolved) {
      rec.status = RecordStatus::under_resolved;
      rec.note = "reference tail " + format_number(ref.solution->tail) + " (l2_error " +
                 format_number(rec.l2_error) + ", h1_error " + format_number(rec.h1_error) + ")";
      rec.l2_error = rec.h1_error = kNaN;
    }
  });
  return records;
}

double log_log_slope(std::span<const std::pair<double, double>> step_error) {
  if (step_error.size() < 2) throw InsufficientDataError("slope needs at least two points");
  double mx = 0.0, my = 0.0;
  for (const auto& [t, e] : step_error) {
    mx += std::log(t);
    my += std::log(e);
  }
  mx /= static_cast<double>(step_error.size());
  my /= static_cast<double>(step_error.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [t, e] : step_error) {
    const double dx = std::log(t) - mx;
    sxy += dx * (std::log(e) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

double fit_order(std::span<const ConvergenceRecord> records) {
  if (records.empty()) throw InsufficientDataError("no records to fit");
  std::vector<std::pair<double, double>> points;
  std::set<double> seen;
  for (const auto& r : records) {
    if (r.method != records.front().method || r.epsilon != records.front().epsilon) {
      throw InputError("fit_order expects records of a single method and epsilon");
    }
    if (std::isfinite(r.l2_error) && r.l2_error > 0.0 && r.tau > 0.0 && seen.insert(r.tau).second) {
      points.emplace_back(r.tau, r.l2_error);
    }
  }
  if (points.size() < 3) {
    throw InsufficientDataError("need at least 3 records with distinct tau and positive error, got " +
                                std::to_string(points.size()));
  }
  std::sort(points.begin(), points.end());
  points.resize(std::min<std::size_t>(points.size(), 4));

  return log_log_slope(points);
}

std::vector<double> epsilon_scaling(std::span<const ConvergenceRecord> records) {
  if (records.empty()) throw InsufficientDataError("no records to compare");
  std::vector<std::pair<double, double>> points;
  for (const auto& r : records) {
    if (r.method != records.front().method || r.tau != records.front().tau) {
      throw InputError("epsilon_scaling expects records of a single method and tau");
    }
    points.emplace_back(r.epsilon, r.l2_error);
  }
  std::sort(points.begin(), points.end(), std::greater<>());
  points.erase(std::unique(points.begin(), points.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }),
               points.end());
  if (points.size() < 2) {
    throw InsufficientDataError("need records for at least 2 distinct epsilon values");
  }
  std::vector<double> ratios;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    ratios.push_back(points[i + 1].second / points[i].second);
  }
  return ratios;
}

}  // namespace longwave
