#pragma once

#include <string>

#include "kgrm/errors.hpp"

namespace kgrm {

/// Speed of light, either a finite positive value or the symbolic c -> inf
/// limit. The limit is a flag, not a large float: every formula containing
/// 1/c^2 takes an explicit zero branch so limit runs are free of cancellation.
struct SpeedOfLight {
  double c = 1.0;
  bool infinite = false;

  static SpeedOfLight finite(double value) { return {value, false}; }
  static SpeedOfLight unbounded() { return {0.0, true}; }

  bool is_infinite() const noexcept { return infinite; }

  /// 1/c^2; exactly zero in the quasi-static limit.
  double inv_c2() const noexcept { return infinite ? 0.0 : 1.0 / (c * c); }

  double value() const {
    if (infinite) throw Error(ErrorKind::Misuse, "finite speed of light required here");
    return c;
  }
  double squared() const {
    if (infinite) throw Error(ErrorKind::Misuse, "finite speed of light required here");
    return c * c;
  }
};

enum class MassMode { Rest, Relativistic, Effective };

const char* mass_mode_name(MassMode mode) noexcept;
MassMode mass_mode_from_name(const std::string& name);

/// Physical constants and global mode switches. Natural units
/// (hbar = c = m0 = 1) are the defaults; everything stays a runtime
/// parameter so limit scans can vary c without rebuilding.
struct PhysicalConfig {
  double hbar = 1.0;
  SpeedOfLight c{};
  double q = -1.0;
  double m0 = 1.0;
  MassMode mass_mode = MassMode::Rest;
  bool quasi_static = false;  // c -> inf limit; requires mass_mode = Rest
};

/// Checks positivity of the constants and the mode coupling rules.
/// Returns the config unchanged on success.
PhysicalConfig validate_config(const PhysicalConfig& cfg);

/// gamma = 1/sqrt(1 - v^2/c^2). Domain error for |v| >= c.
double lorentz_factor(double v, const PhysicalConfig& cfg);

struct KinematicSample {
  double v;
  double gamma;
};

KinematicSample kinematic_sample(double v, const PhysicalConfig& cfg);

}  // namespace kgrm
