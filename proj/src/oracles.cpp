#include "longwave/oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace longwave::oracles {

ModeMap to_modes(const SpectrumState& state) {
  ModeMap modes;
  const auto& grid = state.grid();
  for (int k = grid.min_wavenumber(); k <= grid.max_wavenumber(); ++k) {
    modes[k] = state.coeff(k);
  }
  return modes;
}

SpectrumState from_modes(const ModeMap& modes, const SpectralGrid& grid) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(grid.n_modes()));
  for (const auto& [k, c] : modes) {
    if (c != Complex(0.0)) coeffs[grid.slot(k)] = c;
  }
  return SpectrumState(grid, std::move(coeffs));
}

ModeMap direct_dft(std::span<const double> samples) {
  const int n = static_cast<int>(samples.size());
  ModeMap modes;
  for (int k = -n / 2; k < n / 2; ++k) {
    Complex sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = -std::numbers::pi + 2.0 * std::numbers::pi * j / n;
      sum += samples[static_cast<std::size_t>(j)] * std::polar(1.0, -k * x);
    }
    modes[k] = sum / static_cast<double>(n);
  }
  return modes;
}

std::vector<Complex> direct_synthesis(const ModeMap& modes, int n_points) {
  std::vector<Complex> u(static_cast<std::size_t>(n_points));
  for (int j = 0; j < n_points; ++j) {
    const double x = -std::numbers::pi + 2.0 * std::numbers::pi * j / n_points;
    Complex sum = 0.0;
    for (const auto& [k, c] : modes) sum += c * std::polar(1.0, k * x);
    u[static_cast<std::size_t>(j)] = sum;
  }
  return u;
}

ModeMap direct_convolution(const ModeMap& a, const ModeMap& b) {
  ModeMap out;
  for (const auto& [l, al] : a) {
    for (const auto& [m, bm] : b) out[l + m] += al * bm;
  }
  return out;
}

ModeMap twisted_integral_quadrature(const ModeMap& v, double tau, double alpha, double epsilon) {
  using Rule = boost::math::quadrature::gauss<double, 10>;

  int kmax = 0;
  for (const auto& [k, c] : v) {
    if (c != Complex(0.0)) kmax = std::max(kmax, std::abs(k));
  }
  const double max_rate = 3.0 * std::abs(alpha) * epsilon * (2.0 * kmax) * kmax * kmax;
  const int panels = std::max(4, static_cast<int>(std::ceil(max_rate * tau / 0.5)));
  const double width = tau / panels;

  // Gauss-Legendre on [-1, 1] with symmetric abscissae listed for x >= 0.
  std::vector<std::pair<double, double>> rule;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    rule.emplace_back(x[i], w[i]);
    if (x[i] != 0.0) rule.emplace_back(-x[i], w[i]);
  }

  auto airy = [&](const ModeMap& f, double s) {
    // exp(s alpha eps d_x^3) has symbol exp(-i s alpha eps k^3)
    ModeMap g;
    for (const auto& [k, c] : f) {
      const double kk = k;
      g[k] = c * std::polar(1.0, -s * alpha * epsilon * kk * kk * kk);
    }
    return g;
  };

  ModeMap integral;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    for (const auto& [node, weight] : rule) {
      const double s = mid + 0.5 * width * node;
      const ModeMap a = airy(v, -s);
      const ModeMap integrand = airy(direct_convolution(a, a), s);
      for (const auto& [k, c] : integrand) integral[k] += 0.5 * width * weight * c;
    }
  }
  for (auto& [k, c] : integral) c *= Complex(0.0, epsilon * k);
  return integral;
}

SpectrumState random_band_limited(const SpectralGrid& grid, int band, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-0.5, 0.5);
  SpectrumState state(grid);
  for (int k = 0; k <= band; ++k) state.set_mode(k, Complex(coeff(rng), coeff(rng)));
  return state;
}

double distance(const ModeMap& a, const ModeMap& b) {
  double sum = 0.0;
  for (const auto& [k, c] : a) {
    const auto it = b.find(k);
    sum += std::norm(c - (it == b.end() ? Complex(0.0) : it->second));
  }
  for (const auto& [k, c] : b) {
    if (!a.contains(k)) sum += std::norm(c);
  }
  return std::sqrt(sum);
}

double norm(const ModeMap& a) {
  double sum = 0.0;
  for (const auto& [k, c] : a) sum += std::norm(c);
  return std::sqrt(sum);
}

}  // namespace longwave::oracles
