#pragma once

// Dispersive models  u_t + d_x m_L(sqrt(eps) d_x) u + eps d_x m_Q(sqrt(eps) d_x) u^2 = 0
// on the torus. Symbols are stored as real even functions of xi, i.e. g(xi) is
// the value m(i xi) of the analytic symbol on the imaginary axis.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "longwave/spectral.hpp"

namespace longwave {

using RealSymbol = std::function<double(double)>;

struct DispersiveModel {
  std::string name;
  RealSymbol g_l;
  RealSymbol g_q;
  /// Long-wave coefficient: g_l(xi) = 1 - alpha xi^2 + O(xi^4).
  double alpha = 1.0;
  double beta_l = 0.0;
  double beta_q = 0.0;
  double epsilon = 1.0;
  /// Optional closed form of g_l(xi) - 1 + alpha xi^2. Supplying it avoids the
  /// cancellation in evaluating the defect symbol from g_l directly.
  RealSymbol long_wave_remainder;

  double remainder(double xi) const;
};

/// One of "bbm", "kdv", "whitham". Throws RegistryError for other names and
/// InputError unless epsilon lies in (0, 1].
DispersiveModel builtin_model(std::string_view name, double epsilon);

std::vector<std::string> builtin_model_names();

/// Same model with the nonlinearity switched off (g_q = 0).
DispersiveModel linear_variant(DispersiveModel model);

/// -g_l''(0)/2 by Richardson-extrapolated central differences.
double long_wave_alpha(const RealSymbol& g_l);

struct AssumptionCheck {
  std::string condition;
  bool passed = true;
  /// Sample with the largest violation (or smallest margin when passing).
  double worst_xi = 0.0;
  /// Measured value over admissible bound at worst_xi; <= 1 means satisfied.
  double worst_ratio = 0.0;
};

struct ValidationReport {
  std::vector<AssumptionCheck> checks;

  bool passed() const;
  const AssumptionCheck& check(std::string_view condition) const;
};

/// Samples the symbol hypotheses at xi = sqrt(eps) k for every grid wavenumber.
ValidationReport validate_assumptions(const DispersiveModel& model, const SpectralGrid& grid);

struct OperatorSymbols {
  /// Symbol of exp(-t d_x m_L): exp(-i t k g_l(sqrt(eps) k)).
  std::function<Complex(int, double)> linear_phase;
  /// D_L = d_x m_L - (d_x + alpha eps d_x^3) acts as multiplication by i d_l(k).
  std::function<double(int)> d_l;
};

OperatorSymbols derive_symbols(const DispersiveModel& model, const SpectralGrid& grid);

}  // namespace longwave
