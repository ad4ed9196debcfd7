#include "cmhd/front.hpp"

#include <cmath>

namespace cmhd {

namespace {
// quintic smootherstep and its derivative on [0,1]
double smoother(double s) { return s * s * s * (s * (6.0 * s - 15.0) + 10.0); }
double dsmoother(double s) { return 30.0 * s * s * (s - 1.0) * (s - 1.0); }
constexpr double kMaxSmootherSlope = 1.875;  // max of dsmoother on [0,1]
}  // namespace

Cutoff Cutoff::make(const Grid& g, double plateau, double slope_cap) {
  Cutoff c;
  c.plateau = plateau;
  c.slope_cap = slope_cap;
  const double width = kMaxSmootherSlope / slope_cap;
  c.support = plateau + width;
  if (c.support >= g.a_wall)
    throw ValidationError("cutoff: support must fit inside the strip; increase a_wall");
  c.chi_tab.resize(g.np1());
  c.dchi_tab.resize(g.np1());
  for (int i = 0; i < g.np1(); ++i) {
    c.chi_tab[i] = c.chi(g.x1(i));
    c.dchi_tab[i] = c.dchi(g.x1(i));
  }
  return c;
}

double Cutoff::chi(double x) const {
  const double ax = std::abs(x);
  if (ax <= plateau) return 1.0;
  if (ax >= support) return 0.0;
  return smoother((support - ax) / (support - plateau));
}

double Cutoff::dchi(double x) const {
  const double ax = std::abs(x);
  if (ax <= plateau || ax >= support) return 0.0;
  const double w = support - plateau;
  const double d = -dsmoother((support - ax) / w) / w;
  return x > 0 ? d : -d;
}

namespace {
LiftedFront lift_impl(const BdryField& phi, const BdryField& dtphi, const Cutoff& chi,
                      const Grid& g) {
  LiftedFront lf;
  lf.psi = Field(g);
  lf.dtpsi = Field(g);
  lf.d1psi = Field(g);
  lf.d2psi = Field(g);
  lf.chi_tab = chi.chi_tab;
  lf.dchi_tab = chi.dchi_tab;
  lf.phi_inf = inf_norm(phi);
  lf.admissible = lf.phi_inf <= 1.0;
  const BdryField d2phi = d2_bdry(phi, g);
  for (int i = 0; i < g.np1(); ++i) {
    const double cv = chi.chi_tab[i];
    const double cd = chi.dchi_tab[i];
    for (int j = 0; j < g.n2; ++j) {
      lf.psi.at(i, j) = cv * phi[j];
      lf.dtpsi.at(i, j) = cv * dtphi[j];
      // d/dx1 of chi(+-x1) phi is chi'(x1) phi on both sides (chi even)
      lf.d1psi.at(i, j) = cd * phi[j];
      lf.d2psi.at(i, j) = cv * d2phi[j];
    }
  }
  return lf;
}
}  // namespace

LiftedFront lift_front(const BdryField& phi, const BdryField& dtphi, const Cutoff& chi,
                       const Grid& g) {
  LiftedFront lf = lift_impl(phi, dtphi, chi, g);
  if (!lf.admissible)
    throw ValidationError("lift_front: inadmissible front, ||phi||_inf > 1");
  return lf;
}

LiftedFront lift_front_unchecked(const BdryField& phi, const BdryField& dtphi, const Cutoff& chi,
                                 const Grid& g) {
  return lift_impl(phi, dtphi, chi, g);
}

TraceQuantities trace_quantities(const State& U, const LiftedFront& lf) {
  TraceQuantities q;
  const Field& b = lf.d2psi;
  q.v_N = Field(b.np1, b.n2);
  q.H_N = Field(b.np1, b.n2);
  q.H_tau = Field(b.np1, b.n2);
  for (int i = 0; i < b.np1; ++i)
    for (int j = 0; j < b.n2; ++j) {
      const double bb = b.at(i, j);
      q.v_N.at(i, j) = U.c[CV1].at(i, j) - U.c[CV2].at(i, j) * bb;
      q.H_N.at(i, j) = U.c[CH1].at(i, j) - U.c[CH2].at(i, j) * bb;
      q.H_tau.at(i, j) = U.c[CH1].at(i, j) * bb + U.c[CH2].at(i, j);
    }
  return q;
}

BdryField jump(const Field& gp, const Field& gm) {
  BdryField r(static_cast<std::size_t>(gp.n2));
  for (int j = 0; j < gp.n2; ++j) r[j] = gp.at(0, j) - gm.at(0, j);
  return r;
}

BdryField jump(const BdryField& gp, const BdryField& gm) {
  BdryField r(gp.size());
  for (std::size_t j = 0; j < gp.size(); ++j) r[j] = gp[j] - gm[j];
  return r;
}

BdryField normal_jump(const Field& ap, const Field& am, const Grid& g) {
  const BdryField dp = d1_trace0(ap, g);
  const BdryField dm = d1_trace0(am, g);
  BdryField r(dp.size());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = dp[j] + dm[j];
  return r;
}

double inf_norm(const BdryField& f) {
  double m = 0;
  for (double x : f) m = std::max(m, std::abs(x));
  return m;
}

double l2_norm(const BdryField& f, const Grid& g) {
  double s = 0;
  for (double x : f) s += x * x;
  return std::sqrt(s * g.dx2());
}

}  // namespace cmhd
