#pragma once

#include <cstdint>
#include <vector>

#include "kgrm/field.hpp"
#include "kgrm/operators.hpp"
#include "kgrm/quantities.hpp"

namespace kgrm {

/// Polar split psi = R exp(i S / hbar) in quotient form: rho = R^2 together
/// with dS/dx and dS/dt recovered from hbar * Im(psi* d psi)/rho, so no phase
/// unwrapping is ever needed. Points with rho below the node threshold are
/// masked; phase derivatives there are stored as zero and excluded from norms.
struct PolarView {
  RealField rho;
  RealField grad_s;
  RealField dt_s;
  std::vector<std::uint8_t> mask;  // 1 = node, excluded
  double eps_node = 0.0;
  double time = 0.0;

  std::size_t unmasked_count() const;
};

/// Default node threshold: eps_node = 1e-12 * max(rho).
inline constexpr double kDefaultNodeEpsRel = 1e-12;

PolarView polar_decompose(const ComplexField& psi, const ComplexField& dtpsi,
                          const Operators& ops, const PhysicalConfig& cfg,
                          double eps_node_rel = kDefaultNodeEpsRel);

/// Discrete space/time derivatives of the polar data, built from a snapshot
/// triplet at t-dt, t, t+dt (never from integrator internals). The amplitude
/// derivatives follow the chain rule from the rho stencils, dR = d(rho)/(2R),
/// which keeps 2 R dR == d(rho) exact in floating point; box_R uses direct
/// stencils on R = sqrt(rho) instead. The mask is the union of the three
/// input masks dilated by one stencil point.
struct PolarDerivatives {
  RealField drho_dt;
  RealField grad_rho;
  RealField dr_dt;    // dR/dt
  RealField grad_r;   // dR/dx
  RealField ddts_dt;  // d(dS/dt)/dt
  RealField grad_dts;
  RealField box_s;  // d2S/dx2 - (1/c^2) d2S/dt2
  RealField box_r;  // d2R/dx2 - (1/c^2) d2R/dt2
  std::vector<std::uint8_t> mask;
  double dt = 0.0;
};

PolarDerivatives polar_derivatives(const PolarView& prev, const PolarView& cur,
                                   const PolarView& next, double dt, const Operators& ops,
                                   const PhysicalConfig& cfg);

/// Norms restricted to unmasked points; the L2 form carries the dx weight.
double masked_l2(const RealField& f, const std::vector<std::uint8_t>& mask);
double masked_linf(const RealField& f, const std::vector<std::uint8_t>& mask);

}  // namespace kgrm
