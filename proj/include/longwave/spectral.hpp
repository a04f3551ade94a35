#pragma once

// Fourier pseudo-spectral representation of real 2*pi-periodic fields.
//
// Coefficients follow u_hat[k] = (1/N) sum_j u_j exp(-i k x_j) with collocation
// points x_j = -pi + 2*pi*j/N, so u_hat[k] approximates the Fourier-series
// coefficient of the continuous field. Wavenumbers run over -N/2 .. N/2-1 and
// are stored in the usual FFT slot order (k >= 0 first, then negative k).

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace longwave {

using Complex = std::complex<double>;

namespace detail {
struct FftPlans;
}

class SpectralGrid {
 public:
  /// Throws InputError unless n_modes is even and at least 8.
  explicit SpectralGrid(int n_modes);

  int n_modes() const noexcept { return n_; }
  /// Largest |k| kept by the 2/3-rule truncation around products.
  int dealias_cutoff() const noexcept { return cutoff_; }
  int min_wavenumber() const noexcept { return -n_ / 2; }
  int max_wavenumber() const noexcept { return n_ / 2 - 1; }

  double point(int j) const;
  std::vector<double> points() const;

  int wavenumber(std::size_t slot) const noexcept {
    const int s = static_cast<int>(slot);
    return s < n_ / 2 ? s : s - n_;
  }
  std::size_t slot(int k) const;

  bool operator==(const SpectralGrid& other) const noexcept { return n_ == other.n_; }

  // Unnormalized transforms over N complex values; thread-safe.
  void fft_forward(const Complex* in, Complex* out) const;
  void fft_backward(const Complex* in, Complex* out) const;

 private:
  int n_;
  int cutoff_;
  std::shared_ptr<const detail::FftPlans> plans_;
};

/// Nonnegative Sobolev regularity exponent r.
class SobolevIndex {
 public:
  explicit SobolevIndex(double r);
  double value() const noexcept { return r_; }

 private:
  double r_;
};

/// Conjugate-symmetric coefficient vector of a real field on a SpectralGrid.
class SpectrumState {
 public:
  explicit SpectrumState(const SpectralGrid& grid);
  /// Coefficients in slot order; throws InputError on a size mismatch.
  SpectrumState(const SpectralGrid& grid, std::vector<Complex> coeffs);

  const SpectralGrid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Complex coeff(int k) const { return coeffs_[grid_.slot(k)]; }
  /// Sets mode k and its mirror -k = conj(value). For k = 0 only the real part
  /// is kept; the unpaired mode -N/2 cannot be set.
  void set_mode(int k, Complex value);

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  std::span<Complex> coeffs() noexcept { return coeffs_; }

  Complex mean() const noexcept { return coeffs_[0]; }

  /// Max |u_hat[-k] - conj(u_hat[k])| including |Im u_hat[0]| and |u_hat[-N/2]|.
  double symmetry_defect() const noexcept;
  /// Projects onto the conjugate-symmetric subspace and zeroes mode -N/2.
  void enforce_symmetry() noexcept;

  SpectrumState& operator+=(const SpectrumState& other);
  SpectrumState& operator-=(const SpectrumState& other);
  SpectrumState& operator*=(double factor) noexcept;

  friend SpectrumState operator+(SpectrumState a, const SpectrumState& b) { return a += b; }
  friend SpectrumState operator-(SpectrumState a, const SpectrumState& b) { return a -= b; }
  friend SpectrumState operator*(double f, SpectrumState a) { return a *= f; }
  friend SpectrumState operator*(SpectrumState a, double f) { return a *= f; }

  bool operator==(const SpectrumState& other) const noexcept {
    return grid_ == other.grid_ && coeffs_ == other.coeffs_;
  }

 private:
  SpectralGrid grid_;
  std::vector<Complex> coeffs_;
};

using WavenumberSymbol = std::function<Complex(int)>;

SpectrumState forward_transform(std::span<const double> samples, const SpectralGrid& grid);

/// Throws RealnessError if the synthesized field has |Im| >= 1e-10 anywhere.
std::vector<double> inverse_transform(const SpectrumState& state);

/// Max |Im u(x_j)| of the synthesized field.
double realness_residue(const SpectrumState& state);

/// (result)_k = symbol(k) * u_hat[k]; throws SymbolError on a non-finite value.
SpectrumState apply_multiplier(const SpectrumState& state, const WavenumberSymbol& symbol);
/// Precomputed multiplier given per slot.
SpectrumState apply_multiplier(const SpectrumState& state, std::span<const Complex> per_slot);
SpectrumState apply_multiplier(const SpectrumState& state, std::span<const double> per_slot);

SpectrumState derivative(const SpectrumState& state);
/// u_hat[k]/(ik) for k != 0 and 0 at k = 0.
SpectrumState antiderivative(const SpectrumState& state);

/// Zeroes every mode with |k| above the dealiasing cutoff.
SpectrumState truncate(const SpectrumState& state);

/// Pointwise square with 2/3-rule truncation before and after.
SpectrumState dealiased_square(const SpectrumState& state);
SpectrumState dealiased_product(const SpectrumState& a, const SpectrumState& b);

/// (sum_k (1+k^2)^r |u_hat[k]|^2)^(1/2)
double sobolev_norm(const SpectrumState& state, SobolevIndex r);

/// max |u_hat[k]| over |k| > from.
double spectral_tail(const SpectrumState& state, int from);

}  // namespace longwave
