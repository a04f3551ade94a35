#pragma once

#include <cmath>
#include <vector>

#include "longwave/spectral.hpp"

namespace longwave::testing {

inline SpectrumState single_mode(const SpectralGrid& grid, int k, Complex value) {
  SpectrumState u(grid);
  u.set_mode(k, value);
  return u;
}

inline SpectrumState constant(const SpectralGrid& grid, double c) {
  SpectrumState u(grid);
  u.set_mode(0, c);
  return u;
}

template <typename F>
std::vector<double> sample(const SpectralGrid& grid, F&& f) {
  auto x = grid.points();
  for (auto& v : x) v = f(v);
  return x;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_coeff_diff(const SpectrumState& a, const SpectrumState& b) {
  double m = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) m = std::max(m, std::abs(a.coeffs()[s] - b.coeffs()[s]));
  return m;
}

}  // namespace longwave::testing
