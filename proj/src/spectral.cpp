#include "longwave/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "longwave/error.hpp"

namespace longwave {

namespace {

// The FFTW planner is not thread-safe; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

constexpr double kRealnessThreshold = 1e-10;

}  // namespace

namespace detail {

struct FftPlans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  explicit FftPlans(int n) {
    std::vector<Complex> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    auto* in = reinterpret_cast<fftw_complex*>(a.data());
    auto* out = reinterpret_cast<fftw_complex*>(b.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    forward = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, flags);
    backward = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, flags);
  }
  FftPlans(const FftPlans&) = delete;
  FftPlans& operator=(const FftPlans&) = delete;
  ~FftPlans() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::FftPlans> plans_for(int n) {
  // The mutex must outlive the cache: plan destructors lock it at exit.
  auto& mutex = planner_mutex();
  static std::map<int, std::shared_ptr<const detail::FftPlans>> cache;
  std::lock_guard lock(mutex);
  auto& entry = cache[n];
  if (!entry) entry = std::make_shared<detail::FftPlans>(n);
  return entry;
}

void check_same_grid(const SpectrumState& a, const SpectrumState& b) {
  if (!(a.grid() == b.grid())) {
    throw InputError("spectrum states live on different grids (" +
                     std::to_string(a.grid().n_modes()) + " vs " +
                     std::to_string(b.grid().n_modes()) + " modes)");
  }
}

// Physical-space samples (complex, imaginary part = residue) of a state.
std::vector<Complex> synthesize(const SpectrumState& state) {
  const auto& grid = state.grid();
  const auto n = static_cast<std::size_t>(grid.n_modes());
  std::vector<Complex> shifted(n), out(n);
  const auto c = state.coeffs();
  // exp(i k x_j) = (-1)^k exp(2 pi i j k / N)
  for (std::size_t s = 0; s < n; ++s) shifted[s] = (s % 2 == 0) ? c[s] : -c[s];
  grid.fft_backward(shifted.data(), out.data());
  return out;
}

std::vector<double> real_samples(const SpectrumState& state) {
  const auto z = synthesize(state);
  std::vector<double> u(z.size());
  double residue = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    residue = std::max(residue, std::abs(z[j].imag()));
    u[j] = z[j].real();
  }
  if (!(residue < kRealnessThreshold)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "imaginary residue %.3e exceeds realness threshold 1e-10",
                  residue);
    throw RealnessError(buf);
  }
  return u;
}

}  // namespace

// ---------------------------------------------------------------------------
// SpectralGrid

SpectralGrid::SpectralGrid(int n_modes) : n_(n_modes), cutoff_(0) {
  if (n_modes < 8 || n_modes % 2 != 0) {
    throw InputError("mode count must be an even integer >= 8, got " + std::to_string(n_modes));
  }
  // Largest c with 3c < N; equals floor(N/3) unless 3 divides N.
  cutoff_ = (n_ - 1) / 3;
  plans_ = plans_for(n_);
}

double SpectralGrid::point(int j) const {
  return -std::numbers::pi + 2.0 * std::numbers::pi * j / n_;
}

std::vector<double> SpectralGrid::points() const {
  std::vector<double> x(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) x[static_cast<std::size_t>(j)] = point(j);
  return x;
}

std::size_t SpectralGrid::slot(int k) const {
  if (k < min_wavenumber() || k > max_wavenumber()) {
    throw InputError("wavenumber " + std::to_string(k) + " outside grid range");
  }
  return static_cast<std::size_t>(k >= 0 ? k : k + n_);
}

void SpectralGrid::fft_forward(const Complex* in, Complex* out) const {
  fftw_execute_dft(plans_->forward,
                   reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void SpectralGrid::fft_backward(const Complex* in, Complex* out) const {
  fftw_execute_dft(plans_->backward,
                   reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

SobolevIndex::SobolevIndex(double r) : r_(r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw InputError("Sobolev index must be a finite nonnegative number");
  }
}

// ---------------------------------------------------------------------------
// SpectrumState

SpectrumState::SpectrumState(const SpectralGrid& grid)
    : grid_(grid), coeffs_(static_cast<std::size_t>(grid.n_modes())) {}

SpectrumState::SpectrumState(const SpectralGrid& grid, std::vector<Complex> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(grid.n_modes())) {
    throw InputError("coefficient vector has length " + std::to_string(coeffs_.size()) +
                     ", grid expects " + std::to_string(grid.n_modes()));
  }
}

void SpectrumState::set_mode(int k, Complex value) {
  if (k == grid_.min_wavenumber()) {
    throw InputError("the unpaired mode -N/2 is pinned to zero");
  }
  if (k == 0) {
    coeffs_[0] = value.real();
    return;
  }
  coeffs_[grid_.slot(k)] = value;
  coeffs_[grid_.slot(-k)] = std::conj(value);
}

double SpectrumState::symmetry_defect() const noexcept {
  const int half = grid_.n_modes() / 2;
  double defect = std::max(std::abs(coeffs_[0].imag()),
                           std::abs(coeffs_[static_cast<std::size_t>(half)]));
  for (int k = 1; k < half; ++k) {
    const auto s = static_cast<std::size_t>(k);
    const auto m = static_cast<std::size_t>(grid_.n_modes() - k);
    defect = std::max(defect, std::abs(coeffs_[m] - std::conj(coeffs_[s])));
  }
  return defect;
}

void SpectrumState::enforce_symmetry() noexcept {
  const int n = grid_.n_modes();
  const int half = n / 2;
  coeffs_[0] = coeffs_[0].real();
  coeffs_[static_cast<std::size_t>(half)] = 0.0;
  for (int k = 1; k < half; ++k) {
    const auto s = static_cast<std::size_t>(k);
    const auto m = static_cast<std::size_t>(n - k);
    const Complex avg = 0.5 * (coeffs_[s] + std::conj(coeffs_[m]));
    coeffs_[s] = avg;
    coeffs_[m] = std::conj(avg);
  }
}

SpectrumState& SpectrumState::operator+=(const SpectrumState& other) {
  check_same_grid(*this, other);
  for (std::size_t s = 0; s < coeffs_.size(); ++s) coeffs_[s] += other.coeffs_[s];
  return *this;
}

SpectrumState& SpectrumState::operator-=(const SpectrumState& other) {
  check_same_grid(*this, other);
  for (std::size_t s = 0; s < coeffs_.size(); ++s) coeffs_[s] -= other.coeffs_[s];
  return *this;
}

SpectrumState& SpectrumState::operator*=(double factor) noexcept {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

// ---------------------------------------------------------------------------
// Transforms and operators

SpectrumState forward_transform(std::span<const double> samples, const SpectralGrid& grid) {
  const auto n = static_cast<std::size_t>(grid.n_modes());
  if (samples.size() != n) {
    throw InputError("expected " + std::to_string(n) + " samples, got " +
                     std::to_string(samples.size()));
  }
  std::vector<Complex> in(samples.begin(), samples.end()), out(n);
  grid.fft_forward(in.data(), out.data());
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t s = 0; s < n; ++s) out[s] *= (s % 2 == 0) ? scale : -scale;
  SpectrumState state(grid, std::move(out));
  state.enforce_symmetry();
  return state;
}

std::vector<double> inverse_transform(const SpectrumState& state) { return real_samples(state); }

double realness_residue(const SpectrumState& state) {
  double residue = 0.0;
  for (const auto& z : synthesize(state)) residue = std::max(residue, std::abs(z.imag()));
  return residue;
}

SpectrumState apply_multiplier(const SpectrumState& state, const WavenumberSymbol& symbol) {
  SpectrumState result(state);
  auto c = result.coeffs();
  for (std::size_t s = 0; s < c.size(); ++s) {
    const int k = state.grid().wavenumber(s);
    const Complex m = symbol(k);
    if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
      throw SymbolError("symbol is not finite at k = " + std::to_string(k));
    }
    c[s] *= m;
  }
  return result;
}

SpectrumState apply_multiplier(const SpectrumState& state, std::span<const Complex> per_slot) {
  if (per_slot.size() != state.size()) throw InputError("multiplier length mismatch");
  SpectrumState result(state);
  auto c = result.coeffs();
  for (std::size_t s = 0; s < c.size(); ++s) c[s] *= per_slot[s];
  return result;
}

SpectrumState apply_multiplier(const SpectrumState& state, std::span<const double> per_slot) {
  if (per_slot.size() != state.size()) throw InputError("multiplier length mismatch");
  SpectrumState result(state);
  auto c = result.coeffs();
  for (std::size_t s = 0; s < c.size(); ++s) c[s] *= per_slot[s];
  return result;
}

SpectrumState derivative(const SpectrumState& state) {
  SpectrumState result(state);
  auto c = result.coeffs();
  for (std::size_t s = 0; s < c.size(); ++s) {
    c[s] *= Complex(0.0, static_cast<double>(state.grid().wavenumber(s)));
  }
  return result;
}

SpectrumState antiderivative(const SpectrumState& state) {
  SpectrumState result(state);
  auto c = result.coeffs();
  c[0] = 0.0;
  for (std::size_t s = 1; s < c.size(); ++s) {
    c[s] /= Complex(0.0, static_cast<double>(state.grid().wavenumber(s)));
  }
  return result;
}

SpectrumState truncate(const SpectrumState& state) {
  SpectrumState result(state);
  const int cutoff = state.grid().dealias_cutoff();
  auto c = result.coeffs();
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (std::abs(state.grid().wavenumber(s)) > cutoff) c[s] = 0.0;
  }
  return result;
}

SpectrumState dealiased_product(const SpectrumState& a, const SpectrumState& b) {
  check_same_grid(a, b);
  const auto ua = real_samples(truncate(a));
  const auto ub = real_samples(truncate(b));
  std::vector<double> prod(ua.size());
  for (std::size_t j = 0; j < ua.size(); ++j) prod[j] = ua[j] * ub[j];
  return truncate(forward_transform(prod, a.grid()));
}

SpectrumState dealiased_square(const SpectrumState& state) {
  auto u = real_samples(truncate(state));
  for (auto& v : u) v *= v;
  return truncate(forward_transform(u, state.grid()));
}

double sobolev_norm(const SpectrumState& state, SobolevIndex r) {
  const auto c = state.coeffs();
  double sum = 0.0;
  for (std::size_t s = 0; s < c.size(); ++s) {
    const double k = state.grid().wavenumber(s);
    const double weight = r.value() == 0.0 ? 1.0 : std::pow(1.0 + k * k, r.value());
    sum += weight * std::norm(c[s]);
  }
  return std::sqrt(sum);
}

double spectral_tail(const SpectrumState& state, int from) {
  double tail = 0.0;
  const auto c = state.coeffs();
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (std::abs(state.grid().wavenumber(s)) > from) tail = std::max(tail, std::abs(c[s]));
  }
  return tail;
}

}  // namespace longwave
