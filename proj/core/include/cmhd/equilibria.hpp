#pragma once

#include "cmhd/basic_state.hpp"

namespace cmhd {

/// Gravitational magnetohydrostatic equilibrium between the interface and a
/// perfectly conducting rigid wall at x1 = a. Pressures follow the
/// stratified closed form, H1 tapers to zero at the wall by default, H2 is
/// constant, entropies are the background constants.
struct EquilibriumParams {
  double G = 0.1;          // gravity constant
  double p0 = 1.0;         // interface pressure
  double H1_0 = 0.5;       // H1 at the interface, must clear kappa
  double H2_0 = 0.25;      // constant tangential field
  double a = 6.0;          // strip depth
  double kappa = 0.1;
  ThermoParams thermo;

  enum class H1Profile { CosTaper, Flat };
  H1Profile h1_profile = H1Profile::CosTaper;

  // composite constants B± = G A e^{-S_bar±/gamma}; overridable directly
  bool override_B = false;
  double B_plus_override = 0, B_minus_override = 0;

  double B(Side s) const;
  /// Positivity bound on the strip depth: a < gamma p0^{(gamma-1)/gamma} /
  /// ((gamma-1) B^-).
  double a_bound() const;
  void validate() const;

  double H1(double x1) const;
};

/// Closed-form pressures at one depth: p±(x1) = (± (gamma-1)/gamma B± x1 +
/// p0^{(gamma-1)/gamma})^{gamma/(gamma-1)}.
struct PressurePair {
  double plus, minus;
};
PressurePair mhs_profile(const EquilibriumParams& ep, double x1);
/// Analytic x1-derivative of the closed form.
PressurePair mhs_profile_d1(const EquilibriumParams& ep, double x1);

/// Residual of +-dp/dx1 - B (p)^{1/gamma} on sampled profiles.
struct MhsResidual {
  std::vector<double> plus, minus;
  double max_abs() const;
};
MhsResidual mhs_residual(const EquilibriumParams& ep, const std::vector<double>& x1,
                         const std::vector<double>& p_plus, const std::vector<double>& p_minus);
/// Residual of the closed form itself, sampled on n points of [0, a].
MhsResidual mhs_residual_closed_form(const EquilibriumParams& ep, int n);

/// Rayleigh-Taylor criterion: [d1 p_bar] = (B+ - B-) p0^{1/gamma} under the
/// sum convention; passes iff strictly positive (equivalently S_bar+ <
/// S_bar- when B comes from gravity).
struct RtResult {
  double jump_d1p = 0;
  bool pass = false;
};
RtResult rt_criterion(const EquilibriumParams& ep);

/// Exports the equilibrium as a zero-velocity BasicState on the grid
/// (stored shifted against thermo.p_bar and S_bar±).
BasicState equilibrium_basic_state(const EquilibriumParams& ep, const Grid& g);

}  // namespace cmhd
