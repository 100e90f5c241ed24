#pragma once

#include <memory>

#include "kgrm/field.hpp"
#include "kgrm/operators.hpp"
#include "kgrm/quantities.hpp"

namespace kgrm {

/// Scalar potential phi, vector potential A (x component) and their analytic
/// derivatives, sampled on a grid at one instant. Built-in potentials fill
/// dt_phi and div_a from closed forms; gauge checks prefer those to stencils.
struct PotentialSample {
  RealField phi;
  RealField ax;
  RealField dt_phi;
  RealField div_a;
  double time = 0.0;
};

class Potential {
 public:
  virtual ~Potential() = default;
  virtual PotentialSample sample(const Grid& grid, double t) const = 0;
  /// True when phi and A carry no time dependence (Coulomb-gauge regime).
  virtual bool static_fields() const = 0;
};

/// phi = phi0, A = a0, everywhere and always.
class UniformPotential final : public Potential {
 public:
  UniformPotential(double phi0, double a0) : phi0_(phi0), a0_(a0) {}
  PotentialSample sample(const Grid& grid, double t) const override;
  bool static_fields() const override { return true; }

 private:
  double phi0_, a0_;
};

/// phi(t) = phi0 * (1 + rate*t), uniform in space. The Lorenz-gauge partner is
/// the linear vector potential A = -(phi0*rate/c^2) * x, whose divergence is
/// uniform; div_a is analytic, so the gauge residual vanishes identically even
/// though the sampled A itself is discontinuous across the periodic seam.
/// In the quasi-static limit the partner degenerates to A = 0.
class TimeRampPotential final : public Potential {
 public:
  TimeRampPotential(double phi0, double rate, const SpeedOfLight& c)
      : phi0_(phi0), rate_(rate), inv_c2_(c.inv_c2()) {}
  PotentialSample sample(const Grid& grid, double t) const override;
  bool static_fields() const override { return rate_ == 0.0 || phi0_ == 0.0; }

 private:
  double phi0_, rate_, inv_c2_;
};

/// Static localized well phi(x) = depth * exp(-d(x,center)^2 / (2 width^2))
/// with d the minimal-image distance on the torus; A = 0. The caller picks the
/// sign of depth so that q*phi <= 0.
class GaussianWellPotential final : public Potential {
 public:
  GaussianWellPotential(double depth, double center, double width);
  PotentialSample sample(const Grid& grid, double t) const override;
  bool static_fields() const override { return true; }

 private:
  double depth_, center_, width_;
};

/// Traveling pair phi = f(x - c t), A = f(x - c t)/c with
/// f(u) = amplitude * cos(2 pi u / L) + offset; satisfies the Lorenz gauge
/// exactly. Requires finite c.
class TravelingGaugePairPotential final : public Potential {
 public:
  TravelingGaugePairPotential(double amplitude, double offset, const SpeedOfLight& c);
  PotentialSample sample(const Grid& grid, double t) const override;
  bool static_fields() const override { return false; }

 private:
  double amplitude_, offset_, c_;
};

}  // namespace kgrm
