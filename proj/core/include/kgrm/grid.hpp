#pragma once

#include <cmath>
#include <cstddef>

#include "kgrm/errors.hpp"

namespace kgrm {

/// Uniform 1-D periodic grid: n points x_j = j*dx on a torus of length n*dx.
struct Grid {
  int n = 0;
  double dx = 0.0;

  static Grid make(int n, double dx) {
    if (n < 8) throw Error(ErrorKind::Validation, "grid needs n >= 8 points");
    if (!(dx > 0.0) || !std::isfinite(dx))
      throw Error(ErrorKind::Validation, "grid spacing dx must be positive and finite");
    return Grid{n, dx};
  }

  double length() const noexcept { return n * dx; }
  double x(int j) const noexcept { return j * dx; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n); }

  int wrap(int j) const noexcept {
    j %= n;
    return j < 0 ? j + n : j;
  }

  /// Shortest signed displacement on the torus.
  double min_image(double d) const noexcept {
    const double l = length();
    d = std::fmod(d, l);
    if (d > 0.5 * l) d -= l;
    if (d < -0.5 * l) d += l;
    return d;
  }

  bool operator==(const Grid&) const = default;
};

}  // namespace kgrm
