#pragma once

// Long-wave-limit-preserving (LWP) exponential integrators.
//
// Both schemes replace the full dispersion inside the Duhamel integral by its
// long-wave truncation d_x + alpha eps d_x^3. The resulting oscillatory
// integral is then solved exactly in Fourier space (twisted_integral), so the
// scheme keeps the eps^2 factor of the local error that lets it reach the
// natural time scale t = 1/eps.

#include <span>
#include <vector>

#include "longwave/models.hpp"
#include "longwave/spectral.hpp"

namespace longwave {

/// Per-mode stabilizing filters, both in (0, 1].
struct Filters {
  std::vector<double> psi_mq;  ///< 1 / (1 + tau |k g_q(sqrt(eps) k)|)
  std::vector<double> psi_dl;  ///< 1 / (1 + tau |k g_q(sqrt(eps) k) d_l(k)|)
};

Filters make_filters(const DispersiveModel& model, const SpectralGrid& grid, double tau);

/// Immutable per-(model, grid, tau) multiplier tables shared by all steppers.
class StepContext {
 public:
  /// Throws InputError unless tau is finite and positive.
  StepContext(DispersiveModel model, const SpectralGrid& grid, double tau);

  const DispersiveModel& model() const noexcept { return model_; }
  const SpectralGrid& grid() const noexcept { return grid_; }
  double tau() const noexcept { return tau_; }
  double epsilon() const noexcept { return model_.epsilon; }

  std::span<const Complex> propagator() const noexcept { return propagator_; }
  std::span<const Complex> half_propagator() const noexcept { return half_propagator_; }
  /// exp(+tau alpha eps d_x^3) and its inverse.
  std::span<const Complex> airy_forward() const noexcept { return airy_forward_; }
  std::span<const Complex> airy_backward() const noexcept { return airy_backward_; }
  std::span<const double> g_q() const noexcept { return g_q_; }
  /// d_x m_Q(sqrt(eps) d_x)
  std::span<const Complex> dx_mq() const noexcept { return dx_mq_; }
  /// D_L
  std::span<const Complex> defect() const noexcept { return defect_; }
  const Filters& filters() const noexcept { return filters_; }

 private:
  DispersiveModel model_;
  SpectralGrid grid_;
  double tau_;
  std::vector<Complex> propagator_, half_propagator_;
  std::vector<Complex> airy_forward_, airy_backward_;
  std::vector<double> g_q_;
  std::vector<Complex> dx_mq_, defect_;
  Filters filters_;
};

/// eps d_x int_0^tau exp(s alpha eps d_x^3) (exp(-s alpha eps d_x^3) v)^2 ds in
/// closed form:
///   1/(3 alpha) [ A (A^-1 d_x^-1 v)^2 - (d_x^-1 v)^2 ] + 2 eps tau v_0 d_x v,
/// A = exp(tau alpha eps d_x^3). For |alpha| < 1e-12 the limit eps tau d_x(v^2)
/// is returned. The k = 0 mode of the result is exactly zero.
SpectrumState twisted_integral(const SpectrumState& v, double tau, const DispersiveModel& model);
SpectrumState twisted_integral(const SpectrumState& v, const StepContext& ctx);

/// u+ = exp(-tau d_x m_L) [ u - m_Q twisted_integral(u) ]
SpectrumState lwp1_step(const SpectrumState& u, const StepContext& ctx);

/// The three tau^2 terms added to the first-order step, signs included.
struct SecondOrderCorrections {
  SpectrumState nonlinear;       ///< tau^2 eps^2 d_x m_Q Psi_mQ (u Psi_mQ d_x m_Q u^2)
  SpectrumState defect_square;   ///< -tau^2/2 eps d_x m_Q Psi_DL D_L u^2
  SpectrumState defect_product;  ///< tau^2 eps d_x m_Q Psi_DL (u D_L u)
};

SecondOrderCorrections lwp2_corrections(const SpectrumState& u, const StepContext& ctx);

SpectrumState lwp2_step(const SpectrumState& u, const StepContext& ctx);

}  // namespace longwave
