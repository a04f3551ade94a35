#include "longwave/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>

#include "longwave/experiments.hpp"
#include "longwave/lwp.hpp"
#include "longwave/oracles.hpp"
#include "longwave/stepping.hpp"

namespace longwave {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

CheckResult transform_oracle() {
  const SpectralGrid grid(16);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> u(16);
  for (auto& v : u) v = dist(rng);
  const auto fast = forward_transform(u, grid);
  const auto direct = oracles::direct_dft(u);
  double err = 0.0;
  for (const auto& [k, c] : direct) {
    if (k != grid.min_wavenumber()) err = std::max(err, std::abs(fast.coeff(k) - c));
  }
  // Round trip reproduces u minus its unpaired -N/2 component, which is pinned.
  const auto back = inverse_transform(fast);
  const int nyq = grid.min_wavenumber();
  const auto nyquist = oracles::direct_synthesis({{nyq, direct.at(nyq)}}, 16);
  double rt = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    rt = std::max(rt, std::abs(back[j] - (u[j] - nyquist[j].real())));
  }
  const bool ok = err < 1e-13 && rt < 1e-13;
  return {"transform vs direct DFT", ok, "max coeff err " + sci(err) + ", synthesis err " + sci(rt)};
}

CheckResult square_oracle() {
  const SpectralGrid grid(32);
  const auto v = oracles::random_band_limited(grid, grid.dealias_cutoff(), 11);
  const auto fast = dealiased_square(v);
  const auto modes = oracles::to_modes(v);
  const auto exact = oracles::direct_convolution(modes, modes);
  double err = 0.0;
  for (int k = grid.min_wavenumber(); k <= grid.max_wavenumber(); ++k) {
    const bool kept = std::abs(k) <= grid.dealias_cutoff();
    const Complex want = kept && exact.contains(k) ? exact.at(k) : Complex(0.0);
    err = std::max(err, std::abs(fast.coeff(k) - want));
  }
  return {"dealiased square vs direct convolution", err < 1e-13, "max err " + sci(err)};
}

CheckResult twisted_quadrature() {
  const SpectralGrid grid(32);
  double worst = 0.0;
  int seed = 0;
  for (double eps : {1.0, 0.1}) {
    for (double tau : {0.2, 0.05}) {
      const auto model = builtin_model("bbm", eps);
      const auto v = oracles::random_band_limited(grid, grid.dealias_cutoff() / 2, 100 + seed++);
      const auto closed = oracles::to_modes(twisted_integral(v, tau, model));
      const auto quad = oracles::twisted_integral_quadrature(oracles::to_modes(v), tau, 1.0, eps);
      worst = std::max(worst, oracles::distance(closed, quad) / oracles::norm(quad));
    }
  }
  return {"twisted integral vs Gauss-Legendre quadrature", worst < 1e-9, "max rel err " + sci(worst)};
}

CheckResult twisted_single_mode() {
  const SpectralGrid grid(32);
  SpectrumState v(grid);
  v.set_mode(1, 0.5);
  double worst = 0.0;
  for (double alpha : {1.0, 1.0 / 6.0, -0.7}) {
    auto model = builtin_model("bbm", 0.3);
    model.alpha = alpha;
    const double tau = 0.37;
    const auto got = inverse_transform(twisted_integral(v, tau, model));
    const auto x = grid.points();
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double want = (std::cos(2 * x[j]) - std::cos(2 * x[j] - 6 * alpha * tau * 0.3)) /
                          (6.0 * alpha);
      worst = std::max(worst, std::abs(got[j] - want));
    }
  }
  return {"twisted integral single-mode closed form", worst < 1e-12, "max err " + sci(worst)};
}

CheckResult alpha_check() {
  double worst = 0.0;
  for (const auto& name : builtin_model_names()) {
    const auto m = builtin_model(name, 1.0);
    worst = std::max(worst, std::abs(long_wave_alpha(m.g_l) - m.alpha));
  }
  return {"long-wave coefficient vs analytic alpha", worst < 1e-8, "max err " + sci(worst)};
}

CheckResult filter_bounds() {
  const SpectralGrid grid(1024);
  bool ok = true;
  for (const auto& name : builtin_model_names()) {
    for (double eps : {1.0, 0.01}) {
      const auto m = builtin_model(name, eps);
      for (double tau : {1.0, 0.01}) {
        const auto f = make_filters(m, grid, tau);
        for (int k = grid.min_wavenumber() + 1; k <= grid.max_wavenumber(); ++k) {
          const auto s = grid.slot(k);
          const double xi = std::sqrt(eps) * k;
          const double a = tau * std::abs(k * m.g_q(xi));
          const double b = a * std::abs(k * m.remainder(xi));
          ok = ok && a * f.psi_mq[s] <= 1.0 && std::abs(f.psi_mq[s] - 1.0) <= a;
          ok = ok && b * f.psi_dl[s] <= 1.0 && std::abs(f.psi_dl[s] - 1.0) <= b;
          ok = ok && f.psi_mq[s] > 0.0 && f.psi_mq[s] <= 1.0 && f.psi_dl[s] > 0.0 &&
               f.psi_dl[s] <= 1.0;
        }
      }
    }
  }
  return {"filter bounds at N = 1024", ok, ok ? "all modes" : "violated"};
}

CheckResult conservation() {
  const SpectralGrid grid(128);
  const auto u0 = default_initial_condition(grid);
  const StepContext ctx(builtin_model("bbm", 0.1), grid, 0.01);
  double drift = 0.0, residue = 0.0;
  for (Method m : {Method::lwp1, Method::lwp2}) {
    evolve(m, u0, ctx, 1000, [&](std::size_t, const SpectrumState& u) {
      drift = std::max(drift, std::abs(u.mean() - u0.mean()));
      residue = std::max(residue, realness_residue(u));
    });
  }
  return {"mass and realness over 1000 LWP steps", drift <= 1e-13 && residue <= 1e-10,
          "mean drift " + sci(drift) + ", realness residue " + sci(residue)};
}

CheckResult linear_exactness() {
  const SpectralGrid grid(128);
  const auto u0 = default_initial_condition(grid);
  const auto model = linear_variant(builtin_model("bbm", 0.1));
  const double tau = 0.01;
  const std::size_t n = 1000;
  const StepContext ctx(model, grid, tau);
  const auto symbols = derive_symbols(model, grid);
  const auto exact =
      apply_multiplier(u0, [&](int k) { return symbols.linear_phase(k, tau * n); });
  double worst = 0.0;
  for (Method m : {Method::lwp1, Method::lwp2}) {
    worst = std::max(worst, sobolev_norm(evolve(m, u0, ctx, n) - exact, SobolevIndex(0.0)));
  }
  return {"linear exactness with g_Q = 0", worst <= 1e-12, "L2 err " + sci(worst)};
}

CheckResult kdv_degeneracy() {
  const SpectralGrid grid(128);
  const auto model = builtin_model("kdv", 0.1);
  const auto symbols = derive_symbols(model, grid);
  double dl = 0.0;
  for (int k = grid.min_wavenumber(); k <= grid.max_wavenumber(); ++k) {
    dl = std::max(dl, std::abs(symbols.d_l(k)));
  }
  const StepContext ctx(model, grid, 0.01);
  const bool unit_filter = std::all_of(ctx.filters().psi_dl.begin(), ctx.filters().psi_dl.end(),
                                       [](double p) { return p == 1.0; });
  const auto u0 = default_initial_condition(grid);
  const auto c = lwp2_corrections(u0, ctx);
  const bool exact = lwp2_step(u0, ctx) == lwp1_step(u0, ctx) + c.nonlinear;
  return {"KdV degeneracy of the defect terms", dl <= 1e-14 && unit_filter && exact,
          "max |d_l| " + sci(dl)};
}

}  // namespace

std::vector<CheckResult> run_validation_suite() {
  const std::vector<std::function<CheckResult()>> checks{
      transform_oracle, square_oracle,  twisted_quadrature, twisted_single_mode, alpha_check,
      filter_bounds,    conservation,   linear_exactness,   kdv_degeneracy};
  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    try {
      results.push_back(check());
    } catch (const std::exception& e) {
      results.push_back({"(exception)", false, e.what()});
    }
  }
  return results;
}

bool report_checks(std::ostream& out, const std::vector<CheckResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  return all;
}

}  // namespace longwave
