#include "longwave/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "longwave/error.hpp"

namespace longwave {

namespace {

// sqrt(tanh(xi)/xi) = 1 - xi^2/6 + 19 xi^4/360 - 55 xi^6/3024 + O(xi^8)
double whitham_series(double xi) {
  const double x2 = xi * xi;
  return 1.0 + x2 * (-1.0 / 6.0 + x2 * (19.0 / 360.0 - x2 * 55.0 / 3024.0));
}

double whitham_symbol(double xi) {
  if (std::abs(xi) < 1e-4) return whitham_series(xi);
  return std::sqrt(std::tanh(xi) / xi);
}

double whitham_remainder(double xi) {
  const double x2 = xi * xi;
  if (std::abs(xi) < 1e-2) return x2 * x2 * (19.0 / 360.0 - x2 * 55.0 / 3024.0);
  return whitham_symbol(xi) - 1.0 + x2 / 6.0;
}

constexpr double kEvenTolerance = 1e-12;
constexpr double kDecaySlack = 1e-9;

}  // namespace

double DispersiveModel::remainder(double xi) const {
  if (long_wave_remainder) return long_wave_remainder(xi);
  return g_l(xi) - 1.0 + alpha * xi * xi;
}

std::vector<std::string> builtin_model_names() { return {"bbm", "kdv", "whitham"}; }

DispersiveModel builtin_model(std::string_view name, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw InputError("epsilon must lie in (0, 1], got " + std::to_string(epsilon));
  }
  DispersiveModel m;
  m.name = std::string(name);
  m.epsilon = epsilon;
  if (name == "bbm") {
    m.g_l = [](double xi) { return 1.0 / (1.0 + xi * xi); };
    m.g_q = m.g_l;
    m.alpha = 1.0;
    m.beta_l = 2.0;
    m.beta_q = 2.0;
    // 1/(1+xi^2) - 1 + xi^2 = xi^4/(1+xi^2)
    m.long_wave_remainder = [](double xi) {
      const double x2 = xi * xi;
      return x2 * x2 / (1.0 + x2);
    };
  } else if (name == "kdv") {
    m.g_l = [](double xi) { return 1.0 - xi * xi; };
    m.g_q = [](double) { return 1.0; };
    m.alpha = 1.0;
    m.beta_l = 0.0;
    m.beta_q = 0.0;
    m.long_wave_remainder = [](double) { return 0.0; };
  } else if (name == "whitham") {
    m.g_l = whitham_symbol;
    m.g_q = [](double) { return 1.0; };
    m.alpha = 1.0 / 6.0;
    m.beta_l = 0.5;
    m.beta_q = 0.0;
    m.long_wave_remainder = whitham_remainder;
  } else {
    throw RegistryError("unknown model '" + std::string(name) + "' (expected bbm, kdv or whitham)");
  }
  return m;
}

DispersiveModel linear_variant(DispersiveModel model) {
  model.name += "-linear";
  model.g_q = [](double) { return 0.0; };
  return model;
}

double long_wave_alpha(const RealSymbol& g_l) {
  const double g0 = g_l(0.0);
  auto second = [&](double h) { return (g_l(h) - 2.0 * g0 + g_l(-h)) / (h * h); };
  auto richardson = [&](double h) { return (4.0 * second(0.5 * h) - second(h)) / 3.0; };

  constexpr double h = 4e-3;
  const double coarse = richardson(h);
  const double fine = richardson(0.5 * h);
  if (!std::isfinite(coarse) || !std::isfinite(fine)) {
    throw DifferentiationError("non-finite difference quotient for the long-wave coefficient");
  }
  if (std::abs(coarse - fine) > 1e-6) {
    throw DifferentiationError("second derivative at 0 did not converge (" +
                               std::to_string(coarse) + " vs " + std::to_string(fine) + ")");
  }
  return -0.5 * fine;
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const AssumptionCheck& ValidationReport::check(std::string_view condition) const {
  for (const auto& c : checks) {
    if (c.condition == condition) return c;
  }
  throw InputError("no assumption check named '" + std::string(condition) + "'");
}

ValidationReport validate_assumptions(const DispersiveModel& model, const SpectralGrid& grid) {
  const double root_eps = std::sqrt(model.epsilon);
  const double inf = std::numeric_limits<double>::infinity();

  AssumptionCheck even{"even", true, 0.0, 0.0};
  AssumptionCheck real{"real", true, 0.0, 0.0};
  AssumptionCheck normalized{"normalized", true, 0.0, 0.0};
  AssumptionCheck decay{"quadratic_decay", true, 0.0, 0.0};
  AssumptionCheck slope{"quadratic_slope", true, 0.0, 0.0};

  auto record = [](AssumptionCheck& c, double xi, double ratio, bool ok) {
    if (!ok) c.passed = false;
    if (!(ratio <= c.worst_ratio)) {
      c.worst_ratio = ratio;
      c.worst_xi = xi;
    }
  };

  const double at_zero = model.g_l(0.0);
  const double norm_err = std::abs(at_zero - 1.0);
  record(normalized, 0.0, norm_err / kEvenTolerance, norm_err <= kEvenTolerance);

  for (int k = grid.min_wavenumber(); k <= grid.max_wavenumber(); ++k) {
    const double xi = root_eps * k;
    const double gl = model.g_l(xi), gl_m = model.g_l(-xi);
    const double gq = model.g_q(xi), gq_m = model.g_q(-xi);

    const bool finite = std::isfinite(gl) && std::isfinite(gl_m) && std::isfinite(gq) &&
                        std::isfinite(gq_m);
    record(real, xi, finite ? 0.0 : inf, finite);
    if (!finite) continue;

    const double tol_l = kEvenTolerance * std::max(1.0, std::abs(gl));
    const double tol_q = kEvenTolerance * std::max(1.0, std::abs(gq));
    const double odd = std::max(std::abs(gl - gl_m) / tol_l, std::abs(gq - gq_m) / tol_q);
    record(even, xi, odd, odd <= 1.0);

    // With beta_Q = 0 the hypothesis degenerates to plain boundedness |m_Q| <= 1.
    const double bound =
        model.beta_q > 0.0 ? 1.0 / (1.0 + std::pow(std::abs(xi), model.beta_q)) : 1.0;
    record(decay, xi, std::abs(gq) / bound, std::abs(gq) <= bound + kDecaySlack);

    const double h = 1e-5 * std::max(1.0, std::abs(xi));
    const double dq = (model.g_q(xi + h) - model.g_q(xi - h)) / (2.0 * h);
    const double slope_bound = 1.0 / (1.0 + std::abs(xi));
    record(slope, xi, std::abs(dq) / slope_bound, std::abs(dq) <= slope_bound + kDecaySlack);
  }
  return ValidationReport{{even, real, normalized, decay, slope}};
}

OperatorSymbols derive_symbols(const DispersiveModel& model, const SpectralGrid& grid) {
  const double root_eps = std::sqrt(model.epsilon);
  const int kmin = grid.min_wavenumber(), kmax = grid.max_wavenumber();
  auto check = [kmin, kmax](int k) {
    if (k < kmin || k > kmax) throw InputError("wavenumber " + std::to_string(k) + " off grid");
  };
  OperatorSymbols symbols;
  symbols.linear_phase = [model, root_eps, check](int k, double t) {
    check(k);
    // Built from |k| so that the -k value is the exact conjugate.
    const double kk = std::abs(k);
    const double phase = t * kk * model.g_l(root_eps * kk);
    const Complex z = std::polar(1.0, -phase);
    return k >= 0 ? z : std::conj(z);
  };
  symbols.d_l = [model, root_eps, check](int k) {
    check(k);
    const double kk = std::abs(k);
    const double value = kk * model.remainder(root_eps * kk);
    return k >= 0 ? value : -value;
  };
  return symbols;
}

}  // namespace longwave
