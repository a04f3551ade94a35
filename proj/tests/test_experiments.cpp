#include <doctest.h>

#include <cmath>
#include <set>

#include "longwave/error.hpp"
#include "longwave/experiments.hpp"
#include "longwave/lwp.hpp"
#include "support.hpp"

using namespace longwave;

namespace {

double l2(const SpectrumState& u) { return sobolev_norm(u, SobolevIndex(0.0)); }

ExperimentPlan small_plan() {
  ExperimentPlan p;
  p.model = "bbm";
  p.epsilons = {0.1, 0.2};
  p.taus = {0.1, 0.25, 0.05};
  p.methods = {Method::lwp1, Method::lwp2};
  p.n_modes = 128;
  p.t_final_rule = TFinalRule::fixed;
  p.t_final = 1.0;
  return p;
}

ConvergenceRecord synthetic(std::string method, double eps, double tau, double err) {
  ConvergenceRecord r;
  r.method = std::move(method);
  r.model = "bbm";
  r.epsilon = eps;
  r.tau = tau;
  r.l2_error = err;
  return r;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("default initial condition") {
  const SpectralGrid grid(128);
  const auto u0 = default_initial_condition(grid);
  CHECK(std::abs(u0.mean() - 0.5) < 1e-15);
  CHECK(u0.symmetry_defect() == 0.0);
  CHECK(spectral_tail(u0, 42) < 1e-12);

  // the L2 norm has converged once N >= 64
  const double n64 = l2(default_initial_condition(SpectralGrid(64)));
  for (int n : {128, 256, 512}) CHECK(std::abs(l2(default_initial_condition(SpectralGrid(n))) - n64) < 1e-12);

  const auto c = make_initial_condition(InitialCondition::cosine, grid);
  CHECK(c.coeff(1) == Complex(0.5));
  CHECK(c.mean() == Complex(0.0));
  CHECK(make_initial_condition(InitialCondition::standard, grid) == u0);
  CHECK(parse_initial_condition("cosine") == InitialCondition::cosine);
  CHECK_THROWS_AS(parse_initial_condition("gaussian"), InputError);
}

TEST_CASE("step count") {
  CHECK(step_count(10.0, 0.01) == 1000);
  CHECK(step_count(1.0 / 0.1, 0.2 / 64) == 3200);
  CHECK(step_count(1.0, 1.0) == 1);
  CHECK_THROWS_AS(step_count(10.0, 0.3), InputError);
  CHECK_THROWS_AS(step_count(1.0, 2.0), InputError);
  CHECK_THROWS_AS(step_count(1.0, 0.0), InputError);
  CHECK_THROWS_AS(step_count(1.0, -0.5), InputError);
  CHECK_THROWS_AS(step_count(0.0, 0.1), InputError);
}

TEST_CASE("plan validation") {
  CHECK_NOTHROW(validate_plan(small_plan()));

  auto p = small_plan();
  p.taus = {0.1, 0.3};
  try {
    validate_plan(p);
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("tau 0.29999999999999999") != std::string::npos);
  }

  p = small_plan();
  p.t_final_rule = TFinalRule::inverse_epsilon;
  p.epsilons = {0.3};  // 1/0.3 is not a multiple of 0.1
  CHECK_THROWS_AS(validate_plan(p), InputError);

  p = small_plan();
  p.reference_divisor = 20;
  CHECK_THROWS_AS(validate_plan(p), InputError);

  p = small_plan();
  p.epsilons.clear();
  CHECK_THROWS_AS(validate_plan(p), InputError);
  p = small_plan();
  p.taus.clear();
  CHECK_THROWS_AS(validate_plan(p), InputError);
  p = small_plan();
  p.methods.clear();
  CHECK_THROWS_AS(validate_plan(p), InputError);
  p = small_plan();
  p.jobs = 0;
  CHECK_THROWS_AS(validate_plan(p), InputError);
  p = small_plan();
  p.n_modes = 30 + 1;
  CHECK_THROWS_AS(validate_plan(p), InputError);
  p = small_plan();
  p.epsilons = {2.0};
  CHECK_THROWS_AS(validate_plan(p), InputError);
  p = small_plan();
  p.model = "kp";
  CHECK_THROWS_AS(validate_plan(p), RegistryError);
}

TEST_CASE("plan helpers") {
  auto p = small_plan();
  CHECK(p.horizon(0.1) == 1.0);
  CHECK(p.reference_tau() == doctest::Approx(0.001));
  p.t_final_rule = TFinalRule::inverse_epsilon;
  CHECK(p.horizon(0.1) == 10.0);
  p.linear = true;
  CHECK(p.make_model(0.1).g_q(0.3) == 0.0);
}

TEST_CASE("reference solution") {
  auto p = small_plan();
  const auto ref = reference_solution(p, 0.1);
  CHECK(ref.n_steps == 1000);
  CHECK(ref.tau == doctest::Approx(1e-3));
  CHECK(ref.cross_check <= 1e-6);
  CHECK_FALSE(ref.under_resolved);

  // cross-check value is the distance to its lwp2 partner
  const SpectralGrid grid(128);
  const StepContext ctx(p.make_model(0.1), grid, ref.tau);
  const auto partner = evolve(Method::lwp2, default_initial_condition(grid), ctx, ref.n_steps);
  CHECK(l2(ref.state - partner) == ref.cross_check);

  SUBCASE("semigroup") {
    auto half = p;
    half.t_final = 0.5;
    half.taus = {0.05};
    half.reference_divisor = 50;
    const auto mid = reference_solution(half, 0.1);
    const auto twice = evolve(Method::lawson_rk4, mid.state, ctx, 500);
    CHECK(l2(twice - ref.state) < 1e-10);
  }
}

TEST_CASE("reference solution of the linear problem is exact") {
  auto p = small_plan();
  p.linear = true;
  const auto ref = reference_solution(p, 0.1);
  const SpectralGrid grid(128);
  const auto m = p.make_model(0.1);
  const auto s = derive_symbols(m, grid);
  const auto exact = apply_multiplier(default_initial_condition(grid),
                                      [&](int k) { return s.linear_phase(k, 1.0); });
  CHECK(l2(ref.state - exact) < 1e-12);
}

TEST_CASE("reference failures are reported") {
  ExperimentPlan p;
  p.model = "kdv";
  p.epsilons = {1.0};
  p.taus = {5.0};
  p.t_final_rule = TFinalRule::fixed;
  p.t_final = 5.0;
  p.n_modes = 64;
  CHECK_THROWS_AS(reference_solution(p, 1.0), Error);

  const auto records = run_sweep(p);
  REQUIRE(records.size() == 1);
  CHECK(records[0].status == RecordStatus::failed);
  CHECK(std::isnan(records[0].l2_error));
  CHECK(std::isnan(records[0].mass_drift));
  CHECK(records[0].note.rfind("reference: ", 0) == 0);
}

TEST_CASE("cross-check rejects disagreeing references") {
  // At N = 16 the data is badly under-resolved and the two reference
  // integrators drift apart.
  ExperimentPlan p;
  p.epsilons = {0.1};
  p.taus = {0.05};
  p.t_final_rule = TFinalRule::fixed;
  p.t_final = 1.0;
  p.n_modes = 16;
  CHECK_THROWS_AS(reference_solution(p, 0.1), ReferenceValidationError);
}

TEST_CASE("sweep records") {
  const auto p = small_plan();
  const auto records = run_sweep(p);
  REQUIRE(records.size() == 12);

  SUBCASE("deterministic order") {
    std::vector<std::string> keys;
    for (const auto& r : records) keys.push_back(r.method + " " + std::to_string(r.epsilon) + " " + std::to_string(r.tau));
    CHECK(keys.front() == "lwp1 0.200000 0.250000");
    CHECK(keys[1] == "lwp1 0.200000 0.100000");
    CHECK(keys[3] == "lwp1 0.100000 0.250000");
    CHECK(keys[6] == "lwp2 0.200000 0.250000");
    CHECK(keys.back() == "lwp2 0.100000 0.050000");
  }

  SUBCASE("contents") {
    for (const auto& r : records) {
      CAPTURE(r.key());
      CHECK(r.status == RecordStatus::ok);
      CHECK(r.model == "bbm");
      CHECK(r.n_modes == 128);
      CHECK(r.t_final == 1.0);
      CHECK(r.l2_error > 0.0);
      CHECK(r.h1_error >= r.l2_error);
      CHECK(r.mass_drift <= 1e-13);
      CHECK(r.wall_time_s >= 0.0);
      CHECK(r.note.empty());
    }
  }

  SUBCASE("errors fall with tau") {
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
      if (records[i].method == records[i + 1].method &&
          records[i].epsilon == records[i + 1].epsilon) {
        CHECK(records[i + 1].l2_error < records[i].l2_error);
      }
    }
  }

  SUBCASE("parallel sweep is bit-identical") {
    auto q = p;
    q.jobs = 4;
    const auto again = run_sweep(q);
    REQUIRE(again.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      CHECK(again[i].key() == records[i].key());
      CHECK(again[i].l2_error == records[i].l2_error);
      CHECK(again[i].h1_error == records[i].h1_error);
      CHECK(again[i].mass_drift == records[i].mass_drift);
    }
  }
}

TEST_CASE("sweep at the reference step agrees with the cross-check") {
  auto p = small_plan();
  p.epsilons = {0.1};
  p.methods = {Method::lwp2};
  const auto ref = reference_solution(p, 0.1);
  const SpectralGrid grid(128);
  const StepContext ctx(p.make_model(0.1), grid, ref.tau);
  const auto u = evolve(Method::lwp2, default_initial_condition(grid), ctx, ref.n_steps);
  CHECK(l2(u - ref.state) <= 1e-6);
}

TEST_CASE("duplicate grid values collapse") {
  auto p = small_plan();
  p.epsilons = {0.1, 0.1};
  p.taus = {0.1, 0.1, 0.05};
  p.methods = {Method::lawson_euler};
  CHECK(run_sweep(p).size() == 2);
}

TEST_CASE("linear sweeps are exact for every method") {
  auto p = small_plan();
  p.linear = true;
  p.methods = {Method::lwp1, Method::lwp2, Method::lawson_euler, Method::lawson_rk4};
  for (const auto& r : run_sweep(p)) {
    CAPTURE(r.key());
    CHECK(r.model == "bbm-linear");
    CHECK(r.l2_error <= 1e-12);
  }
}

TEST_CASE("under-resolved references flag their records") {
  auto p = small_plan();
  p.n_modes = 32;
  p.epsilons = {0.1};
  p.taus = {0.1, 0.05};
  const auto records = run_sweep(p);
  REQUIRE(records.size() == 4);
  for (const auto& r : records) {
    CHECK(r.status == RecordStatus::under_resolved);
    CHECK(std::isnan(r.l2_error));
    CHECK(std::isnan(r.h1_error));
    CHECK(std::isfinite(r.mass_drift));
    CHECK(r.note.find("reference tail") == 0);
    CHECK(r.note.find("l2_error") != std::string::npos);
  }
  CHECK(resolution_tail(default_initial_condition(SpectralGrid(32))) > kResolutionTolerance);
  CHECK(resolution_tail(default_initial_condition(SpectralGrid(128))) < kResolutionTolerance);
}

TEST_CASE("blow-ups become failed records") {
  // lawson_euler at a huge step on KdV with eps = 1 is violently unstable,
  // while the reference at tau/50 survives.
  ExperimentPlan p;
  p.model = "kdv";
  p.epsilons = {1.0};
  p.taus = {0.5, 0.05};
  p.methods = {Method::lawson_euler};
  p.t_final_rule = TFinalRule::fixed;
  p.t_final = 50.0;
  p.n_modes = 64;
  p.initial = InitialCondition::cosine;
  p.reference_divisor = 500;
  const auto records = run_sweep(p);
  REQUIRE(records.size() == 2);
  const auto& big = records[0];
  CHECK(big.tau == 0.5);
  CHECK(big.status == RecordStatus::failed);
  CHECK(std::isnan(big.l2_error));
  CHECK_FALSE(big.note.empty());
}

TEST_CASE("log-log slope") {
  std::vector<std::pair<double, double>> pts{{1.0, 2.0}, {0.5, 0.5}, {0.25, 0.125}};
  CHECK(log_log_slope(pts) == doctest::Approx(2.0));
  std::vector<std::pair<double, double>> one{{1.0, 1.0}};
  CHECK_THROWS_AS(log_log_slope(one), InsufficientDataError);
}

TEST_CASE("fit order on synthetic data") {
  std::vector<ConvergenceRecord> rs;
  for (double tau : {0.4, 0.2, 0.1, 0.05}) rs.push_back(synthetic("lwp1", 0.1, tau, tau));
  CHECK(fit_order(rs) == doctest::Approx(1.0).epsilon(1e-14));

  rs.clear();
  for (double tau : {0.4, 0.2, 0.1, 0.05}) rs.push_back(synthetic("lwp2", 0.1, tau, 3 * tau * tau));
  CHECK(fit_order(rs) == doctest::Approx(2.0).epsilon(1e-14));

  SUBCASE("only the four smallest steps count") {
    rs.push_back(synthetic("lwp2", 0.1, 1.6, 1e6));
    rs.push_back(synthetic("lwp2", 0.1, 0.8, 1e5));
    CHECK(fit_order(rs) == doctest::Approx(2.0).epsilon(1e-14));
  }
  SUBCASE("nan and duplicate rows are skipped") {
    rs.push_back(synthetic("lwp2", 0.1, 0.025, std::nan("")));
    rs.push_back(synthetic("lwp2", 0.1, 0.05, 3 * 0.05 * 0.05));
    CHECK(fit_order(rs) == doctest::Approx(2.0).epsilon(1e-14));
  }
  SUBCASE("too few points") {
    rs.resize(2);
    CHECK_THROWS_AS(fit_order(rs), InsufficientDataError);
    rs.push_back(synthetic("lwp2", 0.1, 0.01, 0.0));
    CHECK_THROWS_AS(fit_order(rs), InsufficientDataError);
  }
  SUBCASE("mixed groups") {
    rs.push_back(synthetic("lwp1", 0.1, 0.01, 0.01));
    CHECK_THROWS_AS(fit_order(rs), InputError);
  }
}

TEST_CASE("epsilon scaling on synthetic data") {
  std::vector<ConvergenceRecord> rs;
  for (double eps : {0.05, 0.2, 0.1}) rs.push_back(synthetic("lwp1", eps, 0.05, 0.05 * eps));
  const auto ratios = epsilon_scaling(rs);
  REQUIRE(ratios.size() == 2);
  CHECK(ratios[0] == doctest::Approx(0.5));
  CHECK(ratios[1] == doctest::Approx(0.5));

  std::vector<ConvergenceRecord> same{synthetic("lwp1", 0.2, 0.05, 1e-3), synthetic("lwp1", 0.1, 0.05, 1e-3)};
  CHECK(epsilon_scaling(same) == std::vector<double>{1.0});

  std::vector<ConvergenceRecord> single{synthetic("lwp1", 0.1, 0.05, 1e-3), synthetic("lwp1", 0.1, 0.05, 1e-3)};
  CHECK_THROWS_AS(epsilon_scaling(single), InsufficientDataError);
  CHECK_THROWS_AS(epsilon_scaling({}), InsufficientDataError);
  CHECK_THROWS_AS(fit_order({}), InsufficientDataError);

  same.push_back(synthetic("lwp1", 0.05, 0.1, 1e-3));
  CHECK_THROWS_AS(epsilon_scaling(same), InputError);
}

}
