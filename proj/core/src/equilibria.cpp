#include "cmhd/equilibria.hpp"

#include <cmath>

namespace cmhd {

double EquilibriumParams::B(Side s) const {
  if (override_B) return s == Side::Plus ? B_plus_override : B_minus_override;
  return G * thermo.A * std::exp(-thermo.S_bar(s) / thermo.gamma);
}

double EquilibriumParams::a_bound() const {
  const double gm = thermo.gamma;
  const double bm = B(Side::Minus);
  if (bm <= 0) return 1e300;  // gravity off: minus-side pressure never degenerates
  return gm * std::pow(p0, (gm - 1.0) / gm) / ((gm - 1.0) * bm);
}

void EquilibriumParams::validate() const {
  thermo.validate();
  if (p0 <= 0) throw ValidationError("equilibrium: p0 must be positive");
  if (G < 0) throw ValidationError("equilibrium: G must be nonnegative");
  if (std::abs(H1_0) < kappa)
    throw ValidationError("equilibrium: |H1(0)| must clear the kappa threshold");
  if (a >= a_bound())
    throw ValidationError("equilibrium: strip depth violates the positivity bound");
}

double EquilibriumParams::H1(double x1) const {
  if (h1_profile == H1Profile::Flat) return H1_0;
  return H1_0 * std::cos(0.5 * M_PI * x1 / a);
}

PressurePair mhs_profile(const EquilibriumParams& ep, double x1) {
  const double gm = ep.thermo.gamma;
  const double e = (gm - 1.0) / gm;
  const double base = std::pow(ep.p0, e);
  PressurePair p;
  p.plus = std::pow(base + e * ep.B(Side::Plus) * x1, 1.0 / e);
  p.minus = std::pow(base - e * ep.B(Side::Minus) * x1, 1.0 / e);
  return p;
}

PressurePair mhs_profile_d1(const EquilibriumParams& ep, double x1) {
  const PressurePair p = mhs_profile(ep, x1);
  PressurePair d;
  d.plus = ep.B(Side::Plus) * std::pow(p.plus, 1.0 / ep.thermo.gamma);
  d.minus = -ep.B(Side::Minus) * std::pow(p.minus, 1.0 / ep.thermo.gamma);
  return d;
}

double MhsResidual::max_abs() const {
  double m = 0;
  for (double x : plus) m = std::max(m, std::abs(x));
  for (double x : minus) m = std::max(m, std::abs(x));
  return m;
}

MhsResidual mhs_residual(const EquilibriumParams& ep, const std::vector<double>& x1,
                         const std::vector<double>& p_plus, const std::vector<double>& p_minus) {
  MhsResidual r;
  r.plus.resize(x1.size());
  r.minus.resize(x1.size());
  const double inv_g = 1.0 / ep.thermo.gamma;
  for (std::size_t k = 0; k < x1.size(); ++k) {
    // derivative of the closed form expressed through the sampled value
    const double dp_plus = ep.B(Side::Plus) * std::pow(mhs_profile(ep, x1[k]).plus, inv_g);
    const double dp_minus = -ep.B(Side::Minus) * std::pow(mhs_profile(ep, x1[k]).minus, inv_g);
    r.plus[k] = dp_plus - ep.B(Side::Plus) * std::pow(p_plus[k], inv_g);
    r.minus[k] = -dp_minus - ep.B(Side::Minus) * std::pow(p_minus[k], inv_g);
  }
  return r;
}

MhsResidual mhs_residual_closed_form(const EquilibriumParams& ep, int n) {
  MhsResidual r;
  r.plus.resize(n);
  r.minus.resize(n);
  const double inv_g = 1.0 / ep.thermo.gamma;
  for (int k = 0; k < n; ++k) {
    const double x1 = ep.a * k / (n - 1.0);
    const PressurePair p = mhs_profile(ep, x1);
    const PressurePair d = mhs_profile_d1(ep, x1);
    r.plus[k] = d.plus - ep.B(Side::Plus) * std::pow(p.plus, inv_g);
    r.minus[k] = -d.minus - ep.B(Side::Minus) * std::pow(p.minus, inv_g);
  }
  return r;
}

RtResult rt_criterion(const EquilibriumParams& ep) {
  RtResult r;
  r.jump_d1p = (ep.B(Side::Plus) - ep.B(Side::Minus)) * std::pow(ep.p0, 1.0 / ep.thermo.gamma);
  r.pass = r.jump_d1p > 0;
  return r;
}

BasicState equilibrium_basic_state(const EquilibriumParams& ep, const Grid& g) {
  ep.validate();
  if (std::abs(g.a_wall - ep.a) > 1e-12)
    throw ValidationError("equilibrium_basic_state: grid depth must match the strip depth");
  BasicState bs;
  bs.thermo = ep.thermo;
  bs.kappa = ep.kappa;
  bs.U = StatePair(g);
  bs.phi = bdry_zero(g);
  bs.dtphi = bdry_zero(g);
  for (int i = 0; i < g.np1(); ++i) {
    const double x1 = g.x1(i);
    const PressurePair p = mhs_profile(ep, x1);
    const double h1 = ep.H1(x1);
    for (int j = 0; j < g.n2; ++j) {
      bs.U.plus.c[CP].at(i, j) = p.plus - ep.thermo.p_bar;
      bs.U.minus.c[CP].at(i, j) = p.minus - ep.thermo.p_bar;
      bs.U.plus.c[CH1].at(i, j) = h1;
      bs.U.minus.c[CH1].at(i, j) = h1;
      bs.U.plus.c[CH2].at(i, j) = ep.H2_0;
      bs.U.minus.c[CH2].at(i, j) = ep.H2_0;
      // stored entropy is the deviation from the background constants
      bs.U.plus.c[CS].at(i, j) = 0.0;
      bs.U.minus.c[CS].at(i, j) = 0.0;
    }
  }
  const RtResult rt = rt_criterion(ep);
  bs.require_rt = rt.pass;
  return bs;
}

}  // namespace cmhd
