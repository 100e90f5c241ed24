#include "kgrm/quantities.hpp"

#include <cmath>

namespace kgrm {

const char* mass_mode_name(MassMode mode) noexcept {
  switch (mode) {
    case MassMode::Rest: return "rest";
    case MassMode::Relativistic: return "relativistic";
    case MassMode::Effective: return "effective";
  }
  return "unknown";
}

MassMode mass_mode_from_name(const std::string& name) {
  if (name == "rest") return MassMode::Rest;
  if (name == "relativistic") return MassMode::Relativistic;
  if (name == "effective") return MassMode::Effective;
  throw Error(ErrorKind::Parse, "unknown mass_mode '" + name +
                                    "' (expected rest, relativistic, or effective)");
}

PhysicalConfig validate_config(const PhysicalConfig& cfg) {
  if (!(cfg.hbar > 0.0) || !std::isfinite(cfg.hbar))
    throw Error(ErrorKind::Validation, "hbar must be a positive finite number");
  if (!(cfg.m0 > 0.0) || !std::isfinite(cfg.m0))
    throw Error(ErrorKind::Validation, "m0 must be a positive finite number");
  if (!std::isfinite(cfg.q))
    throw Error(ErrorKind::Validation, "q must be finite");
  if (!cfg.c.is_infinite() && (!(cfg.c.c > 0.0) || !std::isfinite(cfg.c.c)))
    throw Error(ErrorKind::Validation, "c must be positive and finite, or the infinite limit");
  PhysicalConfig out = cfg;
  // infinite c IS the quasi-static limit; the flag just makes it queryable
  if (out.c.is_infinite()) out.quasi_static = true;
  if (out.quasi_static && !out.c.is_infinite())
    throw Error(ErrorKind::Validation, "quasi_static requires c = inf");
  if (out.quasi_static && out.mass_mode != MassMode::Rest)
    throw Error(ErrorKind::Validation,
                std::string("quasi_static requires mass_mode = rest, got ") +
                    mass_mode_name(out.mass_mode));
  return out;
}

double lorentz_factor(double v, const PhysicalConfig& cfg) {
  if (cfg.c.is_infinite()) return 1.0;
  const double beta = v / cfg.c.value();
  if (std::abs(beta) >= 1.0)
    throw Error(ErrorKind::Domain, "|v| must be below the speed of light");
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

KinematicSample kinematic_sample(double v, const PhysicalConfig& cfg) {
  return {v, lorentz_factor(v, cfg)};
}

}  // namespace kgrm
