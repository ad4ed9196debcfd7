#pragma once

#include "cmhd/grid.hpp"

namespace cmhd {

/// Even smooth cutoff: identically 1 on [-plateau, plateau], quintic
/// smoothstep transition with |chi'| capped at slope_cap, zero outside the
/// support. The support must fit strictly inside (-a_wall, a_wall).
struct Cutoff {
  double plateau = 1.0;
  double slope_cap = 0.4;
  double support = 0.0;  // plateau + transition width

  std::vector<double> chi_tab;   // chi(x1_i), i = 0..n1
  std::vector<double> dchi_tab;  // chi'(x1_i)

  static Cutoff make(const Grid& g, double plateau = 1.0, double slope_cap = 0.4);

  double chi(double x) const;
  double dchi(double x) const;
};

/// Front trace phi(x2) together with its time derivative; a single time
/// slice of the interface graph.
struct FrontSlice {
  BdryField phi;
  BdryField dtphi;
};

/// Lifted interface geometry. chi is even, so Psi^+ = Psi^- pointwise and a
/// single set of fields serves both sides; only d1Phi carries the side sign.
/// The tabulated cutoff values travel along so that perturbation lifts stay
/// consistent with the basic geometry.
struct LiftedFront {
  Field psi, dtpsi, d1psi, d2psi;
  std::vector<double> chi_tab, dchi_tab;
  bool admissible = true;
  double phi_inf = 0.0;

  double d1Phi(Side s, int i, int j) const { return side_sign(s) + d1psi.at(i, j); }
  double chi_at(int i) const { return chi_tab[static_cast<std::size_t>(i)]; }
  double dchi_at(int i) const { return dchi_tab[static_cast<std::size_t>(i)]; }
};

/// Builds the lifted front. Throws when ||phi||_inf > 1 (inadmissible front).
LiftedFront lift_front(const BdryField& phi, const BdryField& dtphi, const Cutoff& chi,
                       const Grid& g);

/// Same but tolerating inadmissible fronts (admissible flag set instead).
LiftedFront lift_front_unchecked(const BdryField& phi, const BdryField& dtphi, const Cutoff& chi,
                                 const Grid& g);

struct TraceQuantities {
  Field v_N, H_N, H_tau;
};
/// v_N = v1 - v2 d2Psi, H_N = H1 - H2 d2Psi, H_tau = H1 d2Psi + H2.
TraceQuantities trace_quantities(const State& U, const LiftedFront& lf);

/// Interface jump g+ - g- at x1 = 0.
BdryField jump(const Field& gp, const Field& gm);
BdryField jump(const BdryField& gp, const BdryField& gm);
/// Sum convention for normal derivatives: d1 a+ + d1 a- at x1 = 0 (both
/// sides live on the same half strip).
BdryField normal_jump(const Field& ap, const Field& am, const Grid& g);

double inf_norm(const BdryField& f);
double l2_norm(const BdryField& f, const Grid& g);

}  // namespace cmhd
