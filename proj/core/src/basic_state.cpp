#include "cmhd/basic_state.hpp"

#include <cmath>
#include <sstream>

namespace cmhd {

void BasicFrame::finalize(const Grid& g, const ThermoParams& tp) {
  grid = &g;
  thermo = &tp;
  d1U.plus = d1(U.plus, g);
  d1U.minus = d1(U.minus, g);
  d2U.plus = d2(U.plus, g);
  d2U.minus = d2(U.minus, g);
  d2phi = d2_bdry(phi, g);
  jump_d1p = normal_jump(U.plus.c[CP], U.minus.c[CP], g);

  Field htau_p(g), htau_m(g), vn_p(g);
  for (int i = 0; i < g.np1(); ++i)
    for (int j = 0; j < g.n2; ++j) {
      const double b = lf.d2psi.at(i, j);
      htau_p.at(i, j) = U.plus.c[CH1].at(i, j) * b + U.plus.c[CH2].at(i, j);
      htau_m.at(i, j) = U.minus.c[CH1].at(i, j) * b + U.minus.c[CH2].at(i, j);
      vn_p.at(i, j) = U.plus.c[CV1].at(i, j) - U.plus.c[CV2].at(i, j) * b;
    }
  jump_d1Htau = normal_jump(htau_p, htau_m, g);
  d1vN_plus = d1_trace0(vn_p, g);
  v2_plus = trace0(U.plus.c[CV2]);
}

BdryField BasicFrame::HN_trace(Side s) const {
  const Grid& g = *grid;
  BdryField r(static_cast<std::size_t>(g.n2));
  const State& u = U.side(s);
  for (int j = 0; j < g.n2; ++j)
    r[j] = u.c[CH1].at(0, j) - u.c[CH2].at(0, j) * d2phi[j];
  return r;
}

bool ConstraintReport::ok(double tol, double kappa, double eps, bool require_rt) const {
  const bool bc = bc_p <= tol && bc_v1 <= tol && bc_v2 <= tol && bc_Htau <= tol &&
                  bc_front <= tol && jump_d1v <= tol;
  const bool thresholds = min_HN >= kappa / 2.0 && min_p_margin >= 0.0;
  const bool rt = !require_rt || min_rt >= eps / 2.0;
  return bc && thresholds && rt;
}

std::string ConstraintReport::describe() const {
  std::ostringstream os;
  os << "bc_p=" << bc_p << " bc_v1=" << bc_v1 << " bc_v2=" << bc_v2 << " bc_Htau=" << bc_Htau
     << " bc_front=" << bc_front << " jump_d1v=" << jump_d1v << " min|H_N|=" << min_HN
     << " min(p+pbar/2)=" << min_p_margin << " min[d1p]=" << min_rt;
  return os.str();
}

ConstraintReport check_basic_state(const BasicFrame& f, const Grid& g, const ThermoParams& tp) {
  ConstraintReport r;
  const BoundaryResidual br = boundary_residual(f.U, f.phi, f.dtphi, g);
  r.bc_p = inf_norm(br.row[0]);
  r.bc_v1 = inf_norm(br.row[1]);
  r.bc_v2 = inf_norm(br.row[2]);
  r.bc_Htau = inf_norm(br.row[3]);
  r.bc_front = inf_norm(br.row[4]);

  const BdryField jv1 = normal_jump(f.U.plus.c[CV1], f.U.minus.c[CV1], g);
  const BdryField jv2 = normal_jump(f.U.plus.c[CV2], f.U.minus.c[CV2], g);
  r.jump_d1v = std::max(inf_norm(jv1), inf_norm(jv2));

  const BdryField hnp = f.HN_trace(Side::Plus);
  const BdryField hnm = f.HN_trace(Side::Minus);
  double mn = 1e300;
  for (std::size_t j = 0; j < hnp.size(); ++j)
    mn = std::min(mn, std::min(std::abs(hnp[j]), std::abs(hnm[j])));
  r.min_HN = mn;

  double pm = 1e300;
  for (Side s : kSides)
    for (double p : f.U.side(s).c[CP].v) pm = std::min(pm, p + tp.p_bar / 2.0);
  r.min_p_margin = pm;

  double rt = 1e300;
  for (double x : f.jump_d1p) rt = std::min(rt, x);
  r.min_rt = rt;
  return r;
}

BasicFrame BasicState::make_frame(const Grid& g, const Cutoff& chi) const {
  BasicFrame f;
  f.U = U;
  f.dtU = StatePair(g);
  f.phi = phi;
  f.dtphi = dtphi;
  f.lf = lift_front_unchecked(phi, dtphi, chi, g);
  f.finalize(g, thermo);
  return f;
}

void BasicState::validate(const Grid& g, const Cutoff& chi) const {
  if (inf_norm(phi) > 1.0) throw ValidationError("basic state: inadmissible front");
  const BasicFrame f = make_frame(g, chi);
  const ConstraintReport r = check_basic_state(f, g, thermo);
  if (!r.ok(tol, kappa, eps, require_rt))
    throw ValidationError("basic state invariants violated: " + r.describe());
}

double frame_max_speed(const BasicFrame& f, const Grid& g, const ThermoParams& tp) {
  double s = 0;
  for (Side side : kSides) {
    const State& u = f.U.side(side);
    for (int i = 0; i < g.np1(); ++i)
      for (int j = 0; j < g.n2; ++j) {
        const Vec6 w = physical_state(u.at(i, j), side, tp);
        const double rho = density(std::max(w[CP], 1e-12), w[CS], tp);
        const double cs2 = tp.gamma * std::max(w[CP], 1e-12) / rho;
        const double ca2 = (w[CH1] * w[CH1] + w[CH2] * w[CH2]) / rho;
        const double cf = std::sqrt(cs2 + ca2);
        const double inv_d1phi = 1.0 / std::max(0.5, std::abs(f.lf.d1Phi(side, i, j)));
        const double s1 = (std::abs(w[CV1]) + cf + std::abs(f.lf.dtpsi.at(i, j)) +
                           cf * std::abs(f.lf.d2psi.at(i, j))) *
                          inv_d1phi;
        const double s2 = std::abs(w[CV2]) + cf;
        s = std::max(s, std::max(s1, s2));
      }
  }
  return s;
}

StaticBasicProvider::StaticBasicProvider(const BasicState& bs, const Grid& g, const Cutoff& chi) {
  frame_ = bs.make_frame(g, chi);
  max_speed_ = frame_max_speed(frame_, g, bs.thermo);
}

}  // namespace cmhd
