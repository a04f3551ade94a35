#pragma once

// Classical Lawson (integrating-factor) integrators, used as comparison
// methods and as the fine-step reference solver.

#include "longwave/lwp.hpp"

namespace longwave {

/// exp(-tau d_x m_L) [ u - tau eps d_x m_Q u^2 ]
SpectrumState lawson_euler_step(const SpectrumState& u, const StepContext& ctx);

/// Classical RK4 on w(s) = exp(s d_x m_L) u(s), returned untwisted at s = tau.
SpectrumState lawson_rk4_step(const SpectrumState& u, const StepContext& ctx);

}  // namespace longwave
