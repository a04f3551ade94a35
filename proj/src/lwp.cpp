#include "longwave/lwp.hpp"

#include <cmath>
#include <string>
#include <type_traits>

#include "longwave/error.hpp"

namespace longwave {

namespace {

constexpr double kDegenerateAlpha = 1e-12;

// Fills slots for k >= 0 and mirrors the conjugate into -k, so every table
// is exactly conjugate symmetric. The unpaired mode -N/2 gets `unpaired`.
template <typename T, typename F>
std::vector<T> tabulate(const SpectralGrid& grid, F&& f, T unpaired) {
  const int n = grid.n_modes();
  std::vector<T> table(static_cast<std::size_t>(n));
  for (int k = 0; k < n / 2; ++k) {
    const T value = f(k);
    table[static_cast<std::size_t>(k)] = value;
    if (k > 0) {
      if constexpr (std::is_same_v<T, Complex>) {
        table[static_cast<std::size_t>(n - k)] = std::conj(value);
      } else {
        table[static_cast<std::size_t>(n - k)] = value;
      }
    }
  }
  table[static_cast<std::size_t>(n / 2)] = unpaired;
  return table;
}

struct AiryTables {
  std::vector<Complex> forward, backward;
};

AiryTables airy_tables(const SpectralGrid& grid, double tau, double alpha, double epsilon) {
  const double c = tau * alpha * epsilon;
  // exp(c d_x^3) has symbol exp(c (ik)^3) = exp(-i c k^3).
  auto fwd = [c](int k) {
    const double kk = k;
    return std::polar(1.0, -c * kk * kk * kk);
  };
  AiryTables t;
  t.forward = tabulate<Complex>(grid, fwd, Complex(0.0));
  t.backward = tabulate<Complex>(
      grid, [&](int k) { return std::conj(fwd(k)); }, Complex(0.0));
  return t;
}

SpectrumState twisted_integral_impl(const SpectrumState& v, double tau, const DispersiveModel& model,
                                    std::span<const Complex> airy_forward,
                                    std::span<const Complex> airy_backward) {
  const double eps = model.epsilon;
  SpectrumState result(v.grid());
  if (std::abs(model.alpha) < kDegenerateAlpha) {
    result = derivative(dealiased_square(v)) * (eps * tau);
  } else {
    const SpectrumState w = antiderivative(v);
    SpectrumState twisted = apply_multiplier(dealiased_square(apply_multiplier(w, airy_backward)),
                                             airy_forward);
    twisted -= dealiased_square(w);
    twisted *= 1.0 / (3.0 * model.alpha);
    result = twisted + derivative(v) * (2.0 * eps * tau * v.mean().real());
  }
  // The squared terms cancel at k = 0 identically; pin it so the mean is
  // conserved to the bit rather than to rounding.
  result.coeffs()[0] = 0.0;
  return result;
}

}  // namespace

Filters make_filters(const DispersiveModel& model, const SpectralGrid& grid, double tau) {
  const double root_eps = std::sqrt(model.epsilon);
  Filters f;
  auto dx_mq_abs = [&](int k) { return std::abs(k * model.g_q(root_eps * k)); };
  f.psi_mq = tabulate<double>(
      grid, [&](int k) { return 1.0 / (1.0 + tau * dx_mq_abs(k)); }, 1.0);
  f.psi_dl = tabulate<double>(
      grid,
      [&](int k) {
        const double dl = k * model.remainder(root_eps * k);
        return 1.0 / (1.0 + tau * dx_mq_abs(k) * std::abs(dl));
      },
      1.0);
  return f;
}

StepContext::StepContext(DispersiveModel model, const SpectralGrid& grid, double tau)
    : model_(std::move(model)), grid_(grid), tau_(tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw InputError("time step must be positive and finite, got " + std::to_string(tau));
  }
  const double root_eps = std::sqrt(model_.epsilon);
  const auto& m = model_;
  auto phase = [&](double t) {
    return tabulate<Complex>(
        grid_, [&](int k) { return std::polar(1.0, -t * k * m.g_l(root_eps * k)); },
        Complex(0.0));
  };
  propagator_ = phase(tau_);
  half_propagator_ = phase(0.5 * tau_);

  auto airy = airy_tables(grid_, tau_, m.alpha, m.epsilon);
  airy_forward_ = std::move(airy.forward);
  airy_backward_ = std::move(airy.backward);

  g_q_ = tabulate<double>(grid_, [&](int k) { return m.g_q(root_eps * k); }, 0.0);
  dx_mq_ = tabulate<Complex>(
      grid_, [&](int k) { return Complex(0.0, k * m.g_q(root_eps * k)); }, Complex(0.0));
  defect_ = tabulate<Complex>(
      grid_, [&](int k) { return Complex(0.0, k * m.remainder(root_eps * k)); }, Complex(0.0));
  filters_ = make_filters(model_, grid_, tau_);

  for (std::size_t s = 0; s < propagator_.size(); ++s) {
    const bool finite = std::isfinite(propagator_[s].real()) && std::isfinite(g_q_[s]) &&
                        std::isfinite(defect_[s].imag()) && std::isfinite(airy_forward_[s].real());
    if (!finite) {
      throw SymbolError("model symbols are not finite at k = " +
                        std::to_string(grid_.wavenumber(s)));
    }
  }
}

SpectrumState twisted_integral(const SpectrumState& v, double tau, const DispersiveModel& model) {
  const auto airy = airy_tables(v.grid(), tau, model.alpha, model.epsilon);
  return twisted_integral_impl(v, tau, model, airy.forward, airy.backward);
}

SpectrumState twisted_integral(const SpectrumState& v, const StepContext& ctx) {
  return twisted_integral_impl(v, ctx.tau(), ctx.model(), ctx.airy_forward(), ctx.airy_backward());
}

SpectrumState lwp1_step(const SpectrumState& u, const StepContext& ctx) {
  SpectrumState inner = u;
  inner -= apply_multiplier(twisted_integral(u, ctx), ctx.g_q());
  return apply_multiplier(inner, ctx.propagator());
}

SecondOrderCorrections lwp2_corrections(const SpectrumState& u, const StepContext& ctx) {
  const double tau = ctx.tau();
  const double eps = ctx.epsilon();
  const auto& psi = ctx.filters();

  const SpectrumState square = dealiased_square(u);

  // tau^2 eps^2 d_x m_Q Psi_mQ ( u Psi_mQ d_x m_Q u^2 )
  SpectrumState inner = apply_multiplier(apply_multiplier(square, ctx.dx_mq()), psi.psi_mq);
  SpectrumState nonlinear = apply_multiplier(
      apply_multiplier(dealiased_product(u, inner), psi.psi_mq), ctx.dx_mq());
  nonlinear *= tau * tau * eps * eps;

  // -tau^2/2 eps d_x m_Q Psi_DL D_L u^2
  SpectrumState defect_square = apply_multiplier(
      apply_multiplier(apply_multiplier(square, ctx.defect()), psi.psi_dl), ctx.dx_mq());
  defect_square *= -0.5 * tau * tau * eps;

  // tau^2 eps d_x m_Q Psi_DL ( u D_L u )
  SpectrumState defect_product = apply_multiplier(
      apply_multiplier(dealiased_product(u, apply_multiplier(u, ctx.defect())), psi.psi_dl),
      ctx.dx_mq());
  defect_product *= tau * tau * eps;

  return {std::move(nonlinear), std::move(defect_square), std::move(defect_product)};
}

SpectrumState lwp2_step(const SpectrumState& u, const StepContext& ctx) {
  auto c = lwp2_corrections(u, ctx);
  SpectrumState next = lwp1_step(u, ctx);
  next += c.nonlinear;
  next += c.defect_square;
  next += c.defect_product;
  return next;
}

}  // namespace longwave
