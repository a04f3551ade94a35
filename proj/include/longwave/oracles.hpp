#pragma once

// Brute-force reference computations used to check the spectral machinery and
// the closed-form twisted integral. Everything here works mode-by-mode with
// direct O(N^2) sums or numerical quadrature and never touches an FFT.

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "longwave/spectral.hpp"

namespace longwave::oracles {

/// Sparse Fourier coefficients keyed by wavenumber.
using ModeMap = std::map<int, Complex>;

ModeMap to_modes(const SpectrumState& state);
SpectrumState from_modes(const ModeMap& modes, const SpectralGrid& grid);

/// (1/N) sum_j u_j exp(-i k x_j) for k = -N/2 .. N/2-1.
ModeMap direct_dft(std::span<const double> samples);

/// sum_k c_k exp(i k x_j), complex-valued.
std::vector<Complex> direct_synthesis(const ModeMap& modes, int n_points);

/// Exact (unaliased) coefficients of the product of two trigonometric polynomials.
ModeMap direct_convolution(const ModeMap& a, const ModeMap& b);

/// eps d_x int_0^tau exp(s alpha eps d_x^3) (exp(-s alpha eps d_x^3) v)^2 ds by
/// composite 10-point Gauss-Legendre quadrature. The panel count scales with
/// the fastest phase 3 |alpha| eps |k l m| present so each panel sees under half
/// a radian of oscillation.
ModeMap twisted_integral_quadrature(const ModeMap& v, double tau, double alpha, double epsilon);

/// Real field with random coefficients on 0 <= |k| <= band (reproducible per seed).
SpectrumState random_band_limited(const SpectralGrid& grid, int band, std::uint64_t seed);

/// Euclidean norm of a - b over the union of supports.
double distance(const ModeMap& a, const ModeMap& b);
double norm(const ModeMap& a);

}  // namespace longwave::oracles
