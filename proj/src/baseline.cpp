#include "longwave/baseline.hpp"

namespace longwave {

namespace {

// -eps d_x m_Q v^2
SpectrumState nonlinearity(const SpectrumState& v, const StepContext& ctx) {
  return apply_multiplier(dealiased_square(v), ctx.dx_mq()) * -ctx.epsilon();
}

}  // namespace

SpectrumState lawson_euler_step(const SpectrumState& u, const StepContext& ctx) {
  return apply_multiplier(u + ctx.tau() * nonlinearity(u, ctx), ctx.propagator());
}

SpectrumState lawson_rk4_step(const SpectrumState& u, const StepContext& ctx) {
  // Stages written directly in the physical variable: with E = exp(-tau L) and
  // H = exp(-tau L / 2), the twisted stage values map to
  //   a2 = H (u + tau/2 N1),  a3 = H u + tau/2 N2,  a4 = E u + tau H N3,
  //   u+ = E u + tau/6 (E N1 + 2 H N2 + 2 H N3 + N4).
  const double tau = ctx.tau();
  const auto full = ctx.propagator();
  const auto half = ctx.half_propagator();

  const SpectrumState eu = apply_multiplier(u, full);
  const SpectrumState hu = apply_multiplier(u, half);

  const SpectrumState n1 = nonlinearity(u, ctx);
  const SpectrumState n2 = nonlinearity(apply_multiplier(u + (0.5 * tau) * n1, half), ctx);
  const SpectrumState n3 = nonlinearity(hu + (0.5 * tau) * n2, ctx);
  const SpectrumState hn3 = apply_multiplier(n3, half);
  const SpectrumState n4 = nonlinearity(eu + tau * hn3, ctx);

  SpectrumState increment = apply_multiplier(n1, full);
  increment += 2.0 * apply_multiplier(n2, half);
  increment += 2.0 * hn3;
  increment += n4;
  return eu + (tau / 6.0) * increment;
}

}  // namespace longwave
