#pragma once

#include <memory>
#include <span>
#include <string>

#include "kgrm/field.hpp"
#include "kgrm/grid.hpp"

namespace kgrm {

/// Spatial derivative backend. Stencil2 is the default performance path
/// (second-order central differences, periodic wrap); Spectral uses exact
/// Fourier symbols and is preferred for dispersion measurements.
enum class DerivativeMode { Stencil2, Spectral };

const char* derivative_mode_name(DerivativeMode mode) noexcept;
DerivativeMode derivative_mode_from_name(const std::string& name);

/// Discrete d/dx and d^2/dx^2 on a periodic grid, plus the FFT machinery the
/// spectral path and the Fourier-space initial data builders share. Copyable;
/// FFT plans are shared state behind a const interface. All routines are pure
/// with respect to their inputs and keep a fixed evaluation order, so results
/// are reproducible bit-for-bit.
class Operators {
 public:
  Operators(const Grid& grid, DerivativeMode mode);

  const Grid& grid() const noexcept { return grid_; }
  DerivativeMode mode() const noexcept { return mode_; }

  void gradient(std::span<const Complex> in, std::span<Complex> out) const;
  void gradient(std::span<const double> in, std::span<double> out) const;
  void laplacian(std::span<const Complex> in, std::span<Complex> out) const;
  void laplacian(std::span<const double> in, std::span<double> out) const;

  ComplexField gradient(const ComplexField& f) const;
  RealField gradient(const RealField& f) const;
  ComplexField laplacian(const ComplexField& f) const;
  RealField laplacian(const RealField& f) const;

  /// Symbols of the discrete operators on plane waves:
  ///   gradient(e^{ikx})  = i * grad_symbol(k) * e^{ikx}
  ///   laplacian(e^{ikx}) =     lap_symbol(k)  * e^{ikx}   (<= 0)
  /// Exact for k on a grid mode. Stencil2: sin(k dx)/dx and -(2-2cos(k dx))/dx^2;
  /// Spectral: k and -k^2 (gradient symbol 0 at the Nyquist mode).
  double grad_symbol(double k) const noexcept;
  double lap_symbol(double k) const noexcept;

  /// Signed wavenumber of FFT bin m: 2*pi*mm/L with mm in [-n/2, n/2).
  double mode_k(int m) const noexcept;
  bool is_nyquist(int m) const noexcept;

  /// Unnormalized forward DFT (e^{-ikx} convention) and 1/n-normalized
  /// inverse, so inverse(forward(f)) == f up to round-off.
  void fft_forward(std::span<const Complex> in, std::span<Complex> out) const;
  void fft_inverse(std::span<const Complex> in, std::span<Complex> out) const;

 private:
  Grid grid_;
  DerivativeMode mode_;
  struct FftPlans;
  std::shared_ptr<FftPlans> plans_;

  void spectral_apply_real(std::span<const double> in, std::span<double> out, bool second) const;
  void spectral_apply_complex(std::span<const Complex> in, std::span<Complex> out,
                              bool second) const;
};

}  // namespace kgrm
