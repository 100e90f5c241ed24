#pragma once

#include <complex>
#include <vector>

#include "kgrm/grid.hpp"

namespace kgrm {

using Complex = std::complex<double>;

/// Complex samples on a Grid at a fixed time. Plain value type: snapshots are
/// immutable by convention once handed to diagnostics.
struct ComplexField {
  Grid grid;
  double time = 0.0;
  std::vector<Complex> values;

  static ComplexField zeros(const Grid& g, double t = 0.0) {
    return {g, t, std::vector<Complex>(g.size(), Complex{0.0, 0.0})};
  }
  Complex& operator[](std::size_t j) { return values[j]; }
  const Complex& operator[](std::size_t j) const { return values[j]; }
  std::size_t size() const { return values.size(); }
};

struct RealField {
  Grid grid;
  double time = 0.0;
  std::vector<double> values;

  static RealField zeros(const Grid& g, double t = 0.0) {
    return {g, t, std::vector<double>(g.size(), 0.0)};
  }
  static RealField constant(const Grid& g, double value, double t = 0.0) {
    return {g, t, std::vector<double>(g.size(), value)};
  }
  double& operator[](std::size_t j) { return values[j]; }
  const double& operator[](std::size_t j) const { return values[j]; }
  std::size_t size() const { return values.size(); }
};

/// Throws an integrity error naming the first non-finite sample.
void require_finite(const ComplexField& f, const char* what);
void require_finite(const RealField& f, const char* what);

/// Riemann sum of a density: sum rho_j * dx in index order (the documented,
/// partition-independent summation order). Rejects negative samples.
double total_norm(const RealField& rho);

/// sqrt(sum |f|^2 dx) and sum f dx, both accumulated in index order.
double l2_norm(const RealField& f);
double l2_norm(const ComplexField& f);
double linf_norm(const RealField& f);
double integral(const RealField& f);

/// L2 distance between two complex fields on the same grid.
double l2_distance(const ComplexField& a, const ComplexField& b);

/// Unweighted inner product sum conj(a_j) b_j * dx.
Complex inner_product(const ComplexField& a, const ComplexField& b);

}  // namespace kgrm
