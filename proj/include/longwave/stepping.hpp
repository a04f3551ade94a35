#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "longwave/lwp.hpp"

namespace longwave {

enum class Method { lwp1, lwp2, lawson_euler, lawson_rk4 };

std::string_view method_name(Method method) noexcept;
/// Throws InputError for unknown names.
Method parse_method(std::string_view name);
bool is_lwp(Method method) noexcept;

/// One step u^{n+1} = Phi^tau(u^n).
SpectrumState step(Method method, const SpectrumState& u, const StepContext& ctx);

using StepObserver = std::function<void(std::size_t, const SpectrumState&)>;

/// Applies n_steps steps; the observer (if any) sees every state after a step.
SpectrumState evolve(Method method, SpectrumState u0, const StepContext& ctx, std::size_t n_steps,
                     const StepObserver& observer = {});

}  // namespace longwave
