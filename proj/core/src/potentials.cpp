#include "kgrm/potentials.hpp"

#include <cmath>
#include <numbers>

namespace kgrm {

namespace {
PotentialSample empty_sample(const Grid& grid, double t) {
  PotentialSample s;
  s.phi = RealField::zeros(grid, t);
  s.ax = RealField::zeros(grid, t);
  s.dt_phi = RealField::zeros(grid, t);
  s.div_a = RealField::zeros(grid, t);
  s.time = t;
  return s;
}
}  // namespace

PotentialSample UniformPotential::sample(const Grid& grid, double t) const {
  PotentialSample s = empty_sample(grid, t);
  for (int j = 0; j < grid.n; ++j) {
    s.phi[j] = phi0_;
    s.ax[j] = a0_;
  }
  return s;
}

PotentialSample TimeRampPotential::sample(const Grid& grid, double t) const {
  PotentialSample s = empty_sample(grid, t);
  const double phi = phi0_ * (1.0 + rate_ * t);
  const double dphi = phi0_ * rate_;
  const double slope = -dphi * inv_c2_;  // dA/dx
  for (int j = 0; j < grid.n; ++j) {
    s.phi[j] = phi;
    s.dt_phi[j] = dphi;
    s.ax[j] = slope * grid.x(j);
    s.div_a[j] = slope;
  }
  return s;
}

GaussianWellPotential::GaussianWellPotential(double depth, double center, double width)
    : depth_(depth), center_(center), width_(width) {
  if (!(width > 0.0)) throw Error(ErrorKind::Validation, "gaussian-well width must be positive");
}

PotentialSample GaussianWellPotential::sample(const Grid& grid, double t) const {
  PotentialSample s = empty_sample(grid, t);
  const double inv2w2 = 1.0 / (2.0 * width_ * width_);
  for (int j = 0; j < grid.n; ++j) {
    const double d = grid.min_image(grid.x(j) - center_);
    s.phi[j] = depth_ * std::exp(-d * d * inv2w2);
  }
  return s;
}

TravelingGaugePairPotential::TravelingGaugePairPotential(double amplitude, double offset,
                                                         const SpeedOfLight& c)
    : amplitude_(amplitude), offset_(offset), c_(c.value()) {}

PotentialSample TravelingGaugePairPotential::sample(const Grid& grid, double t) const {
  PotentialSample s = empty_sample(grid, t);
  const double k = 2.0 * std::numbers::pi / grid.length();
  for (int j = 0; j < grid.n; ++j) {
    const double u = grid.x(j) - c_ * t;
    const double f = amplitude_ * std::cos(k * u) + offset_;
    const double fp = -amplitude_ * k * std::sin(k * u);  // f'(u)
    s.phi[j] = f;
    s.ax[j] = f / c_;
    s.dt_phi[j] = -c_ * fp;
    s.div_a[j] = fp / c_;
  }
  return s;
}

}  // namespace kgrm
