#include "kgrm/operators.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>

namespace kgrm {

const char* derivative_mode_name(DerivativeMode mode) noexcept {
  return mode == DerivativeMode::Stencil2 ? "stencil2" : "spectral";
}

DerivativeMode derivative_mode_from_name(const std::string& name) {
  if (name == "stencil2") return DerivativeMode::Stencil2;
  if (name == "spectral") return DerivativeMode::Spectral;
  throw Error(ErrorKind::Parse,
              "unknown derivative_mode '" + name + "' (expected stencil2 or spectral)");
}

/// One forward and one backward in-place plan on fftw-aligned scratch.
/// Callers copy through the scratch buffer; at desk-scale n the copies are
/// noise next to the transform itself.
struct Operators::FftPlans {
  int n = 0;
  fftw_complex* buf = nullptr;
  fftw_plan fwd{};
  fftw_plan bwd{};

  explicit FftPlans(int n_) : n(n_) {
    buf = fftw_alloc_complex(static_cast<std::size_t>(n));
    fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~FftPlans() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buf);
  }
  FftPlans(const FftPlans&) = delete;
  FftPlans& operator=(const FftPlans&) = delete;
};

Operators::Operators(const Grid& grid, DerivativeMode mode)
    : grid_(Grid::make(grid.n, grid.dx)), mode_(mode), plans_(std::make_shared<FftPlans>(grid.n)) {}

namespace {

template <typename T>
void central_gradient(std::span<const T> in, std::span<T> out, int n, double dx) {
  const double half = 0.5 / dx;
  out[0] = (in[1] - in[static_cast<std::size_t>(n - 1)]) * half;
  for (int j = 1; j < n - 1; ++j)
    out[static_cast<std::size_t>(j)] =
        (in[static_cast<std::size_t>(j + 1)] - in[static_cast<std::size_t>(j - 1)]) * half;
  out[static_cast<std::size_t>(n - 1)] = (in[0] - in[static_cast<std::size_t>(n - 2)]) * half;
}

template <typename T>
void central_laplacian(std::span<const T> in, std::span<T> out, int n, double dx) {
  const double inv = 1.0 / (dx * dx);
  out[0] = (in[1] + in[static_cast<std::size_t>(n - 1)] - 2.0 * in[0]) * inv;
  for (int j = 1; j < n - 1; ++j)
    out[static_cast<std::size_t>(j)] =
        (in[static_cast<std::size_t>(j + 1)] + in[static_cast<std::size_t>(j - 1)] -
         2.0 * in[static_cast<std::size_t>(j)]) *
        inv;
  out[static_cast<std::size_t>(n - 1)] =
      (in[0] + in[static_cast<std::size_t>(n - 2)] - 2.0 * in[static_cast<std::size_t>(n - 1)]) *
      inv;
}

}  // namespace

void Operators::fft_forward(std::span<const Complex> in, std::span<Complex> out) const {
  auto& p = *plans_;
  auto* b = reinterpret_cast<Complex*>(p.buf);
  for (int j = 0; j < p.n; ++j) b[j] = in[static_cast<std::size_t>(j)];
  fftw_execute(p.fwd);
  for (int j = 0; j < p.n; ++j) out[static_cast<std::size_t>(j)] = b[j];
}

void Operators::fft_inverse(std::span<const Complex> in, std::span<Complex> out) const {
  auto& p = *plans_;
  auto* b = reinterpret_cast<Complex*>(p.buf);
  for (int j = 0; j < p.n; ++j) b[j] = in[static_cast<std::size_t>(j)];
  fftw_execute(p.bwd);
  const double scale = 1.0 / p.n;
  for (int j = 0; j < p.n; ++j) out[static_cast<std::size_t>(j)] = b[j] * scale;
}

double Operators::mode_k(int m) const noexcept {
  const int n = grid_.n;
  int mm = m % n;
  if (mm >= n / 2 + n % 2) mm -= n;  // map to [-n/2, n/2)
  return 2.0 * std::numbers::pi * mm / grid_.length();
}

bool Operators::is_nyquist(int m) const noexcept {
  const int n = grid_.n;
  return n % 2 == 0 && grid_.wrap(m) == n / 2;
}

double Operators::grad_symbol(double k) const noexcept {
  if (mode_ == DerivativeMode::Stencil2) return std::sin(k * grid_.dx) / grid_.dx;
  return k;
}

double Operators::lap_symbol(double k) const noexcept {
  if (mode_ == DerivativeMode::Stencil2)
    return -(2.0 - 2.0 * std::cos(k * grid_.dx)) / (grid_.dx * grid_.dx);
  return -k * k;
}

void Operators::spectral_apply_complex(std::span<const Complex> in, std::span<Complex> out,
                                       bool second) const {
  auto& p = *plans_;
  auto* b = reinterpret_cast<Complex*>(p.buf);
  for (int j = 0; j < p.n; ++j) b[j] = in[static_cast<std::size_t>(j)];
  fftw_execute(p.fwd);
  for (int m = 0; m < p.n; ++m) {
    const double k = mode_k(m);
    if (second) {
      b[m] *= -k * k;
    } else {
      const double s = is_nyquist(m) ? 0.0 : k;  // odd derivative drops the Nyquist mode
      b[m] *= Complex{0.0, s};
    }
  }
  fftw_execute(p.bwd);
  const double scale = 1.0 / p.n;
  for (int j = 0; j < p.n; ++j) out[static_cast<std::size_t>(j)] = b[j] * scale;
}

void Operators::spectral_apply_real(std::span<const double> in, std::span<double> out,
                                    bool second) const {
  auto& p = *plans_;
  auto* b = reinterpret_cast<Complex*>(p.buf);
  for (int j = 0; j < p.n; ++j) b[j] = Complex{in[static_cast<std::size_t>(j)], 0.0};
  fftw_execute(p.fwd);
  for (int m = 0; m < p.n; ++m) {
    const double k = mode_k(m);
    if (second) {
      b[m] *= -k * k;
    } else {
      const double s = is_nyquist(m) ? 0.0 : k;
      b[m] *= Complex{0.0, s};
    }
  }
  fftw_execute(p.bwd);
  const double scale = 1.0 / p.n;
  for (int j = 0; j < p.n; ++j) out[static_cast<std::size_t>(j)] = b[j].real() * scale;
}

void Operators::gradient(std::span<const Complex> in, std::span<Complex> out) const {
  if (mode_ == DerivativeMode::Stencil2)
    central_gradient(in, out, grid_.n, grid_.dx);
  else
    spectral_apply_complex(in, out, false);
}

void Operators::gradient(std::span<const double> in, std::span<double> out) const {
  if (mode_ == DerivativeMode::Stencil2)
    central_gradient(in, out, grid_.n, grid_.dx);
  else
    spectral_apply_real(in, out, false);
}

void Operators::laplacian(std::span<const Complex> in, std::span<Complex> out) const {
  if (mode_ == DerivativeMode::Stencil2)
    central_laplacian(in, out, grid_.n, grid_.dx);
  else
    spectral_apply_complex(in, out, true);
}

void Operators::laplacian(std::span<const double> in, std::span<double> out) const {
  if (mode_ == DerivativeMode::Stencil2)
    central_laplacian(in, out, grid_.n, grid_.dx);
  else
    spectral_apply_real(in, out, true);
}

ComplexField Operators::gradient(const ComplexField& f) const {
  ComplexField out = ComplexField::zeros(f.grid, f.time);
  gradient(std::span<const Complex>(f.values), std::span<Complex>(out.values));
  return out;
}

RealField Operators::gradient(const RealField& f) const {
  RealField out = RealField::zeros(f.grid, f.time);
  gradient(std::span<const double>(f.values), std::span<double>(out.values));
  return out;
}

ComplexField Operators::laplacian(const ComplexField& f) const {
  ComplexField out = ComplexField::zeros(f.grid, f.time);
  laplacian(std::span<const Complex>(f.values), std::span<Complex>(out.values));
  return out;
}

RealField Operators::laplacian(const RealField& f) const {
  RealField out = RealField::zeros(f.grid, f.time);
  laplacian(std::span<const double>(f.values), std::span<double>(out.values));
  return out;
}

}  // namespace kgrm
