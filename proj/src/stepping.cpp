#include "longwave/stepping.hpp"

#include <string>

#include "longwave/baseline.hpp"
#include "longwave/error.hpp"

namespace longwave {

std::string_view method_name(Method method) noexcept {
  switch (method) {
    case Method::lwp1: return "lwp1";
    case Method::lwp2: return "lwp2";
    case Method::lawson_euler: return "lawson_euler";
    case Method::lawson_rk4: return "lawson_rk4";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (auto m : {Method::lwp1, Method::lwp2, Method::lawson_euler, Method::lawson_rk4}) {
    if (method_name(m) == name) return m;
  }
  throw InputError("unknown method '" + std::string(name) +
                   "' (expected lwp1, lwp2, lawson_euler or lawson_rk4)");
}

bool is_lwp(Method method) noexcept { return method == Method::lwp1 || method == Method::lwp2; }

SpectrumState step(Method method, const SpectrumState& u, const StepContext& ctx) {
  switch (method) {
    case Method::lwp1: return lwp1_step(u, ctx);
    case Method::lwp2: return lwp2_step(u, ctx);
    case Method::lawson_euler: return lawson_euler_step(u, ctx);
    case Method::lawson_rk4: return lawson_rk4_step(u, ctx);
  }
  throw InputError("unhandled method");
}

SpectrumState evolve(Method method, SpectrumState u0, const StepContext& ctx, std::size_t n_steps,
                     const StepObserver& observer) {
  for (std::size_t n = 1; n <= n_steps; ++n) {
    u0 = step(method, u0, ctx);
    if (observer) observer(n, u0);
  }
  return u0;
}

}  // namespace longwave
