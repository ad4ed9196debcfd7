#pragma once

#include "cmhd/grid.hpp"
#include "cmhd/smallmat.hpp"

namespace cmhd {

/// Polytropic EOS and background-shift constants. States are stored shifted:
/// the physical unknown is U_stored + shift(side), with shift (p_bar, 0, 0,
/// 0, 0, S_bar_side).
struct ThermoParams {
  double A = 1.0;
  double gamma = 5.0 / 3.0;
  double p_bar = 1.0;
  double S_bar_plus = -0.5;
  double S_bar_minus = 0.5;

  double S_bar(Side s) const { return s == Side::Plus ? S_bar_plus : S_bar_minus; }
  Vec6 shift(Side s) const {
    Vec6 u;
    u[CP] = p_bar;
    u[CS] = S_bar(s);
    return u;
  }
  void validate() const {
    if (A <= 0) throw ValidationError("thermo: A must be positive");
    if (gamma <= 1) throw ValidationError("thermo: gamma must exceed 1");
    if (p_bar <= 0) throw ValidationError("thermo: p_bar must be positive");
    if (S_bar_plus == S_bar_minus)
      throw ValidationError("thermo: background entropies must differ");
  }
};

/// rho = A p^{1/gamma} e^{-S/gamma} for physical pressure p > 0.
double density(double p, double S, const ThermoParams& tp);

/// Physical state at a node: stored value plus the side's shift.
inline Vec6 physical_state(const Vec6& stored, Side s, const ThermoParams& tp) {
  return stored + tp.shift(s);
}

// Hyperbolicity thresholds on the stored (shifted) pressure.
inline bool hyperbolic_strict(double p_stored, const ThermoParams& tp) {
  return p_stored > -tp.p_bar / 4.0;  // iterate-level bound
}
inline bool hyperbolic_relaxed(double p_stored, const ThermoParams& tp) {
  return p_stored >= -tp.p_bar / 2.0;  // basic-state bound
}

}  // namespace cmhd
