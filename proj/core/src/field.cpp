#include "kgrm/field.hpp"

#include <cmath>
#include <string>

namespace kgrm {

namespace {
[[noreturn]] void bad_sample(const char* what, std::size_t j) {
  throw Error(ErrorKind::Integrity,
              std::string(what) + ": non-finite sample at index " + std::to_string(j));
}
}  // namespace

void require_finite(const ComplexField& f, const char* what) {
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    const Complex v = f.values[j];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) bad_sample(what, j);
  }
}

void require_finite(const RealField& f, const char* what) {
  for (std::size_t j = 0; j < f.values.size(); ++j)
    if (!std::isfinite(f.values[j])) bad_sample(what, j);
}

double total_norm(const RealField& rho) {
  double sum = 0.0;
  for (std::size_t j = 0; j < rho.values.size(); ++j) {
    const double v = rho.values[j];
    if (v < 0.0)
      throw Error(ErrorKind::Integrity,
                  "total_norm: negative density sample at index " + std::to_string(j));
    sum += v;
  }
  return sum * rho.grid.dx;
}

double l2_norm(const RealField& f) {
  double sum = 0.0;
  for (double v : f.values) sum += v * v;
  return std::sqrt(sum * f.grid.dx);
}

double l2_norm(const ComplexField& f) {
  double sum = 0.0;
  for (const Complex& v : f.values) sum += std::norm(v);
  return std::sqrt(sum * f.grid.dx);
}

double linf_norm(const RealField& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double integral(const RealField& f) {
  double sum = 0.0;
  for (double v : f.values) sum += v;
  return sum * f.grid.dx;
}

double l2_distance(const ComplexField& a, const ComplexField& b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.values.size(); ++j) sum += std::norm(a.values[j] - b.values[j]);
  return std::sqrt(sum * a.grid.dx);
}

Complex inner_product(const ComplexField& a, const ComplexField& b) {
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < a.values.size(); ++j) sum += std::conj(a.values[j]) * b.values[j];
  return sum * a.grid.dx;
}

}  // namespace kgrm
