#include "cmhd/linearize.hpp"

#include <cmath>

namespace cmhd {

double rows_inf_norm(const BoundaryRows& r) {
  double m = 0;
  for (const auto& row : r)
    for (double x : row) m = std::max(m, std::abs(x));
  return m;
}

Field lift_perturbation(const BdryField& dphi, const Cutoff& chi, const Grid& g) {
  Field f(g);
  for (int i = 0; i < g.np1(); ++i) {
    const double c = chi.chi_tab[i];
    for (int j = 0; j < g.n2; ++j) f.at(i, j) = c * dphi[j];
  }
  return f;
}

StatePair good_unknown(const StatePair& dU, const Field& dpsi, const BasicFrame& bf) {
  const Grid& g = *bf.grid;
  StatePair out = dU;
  for (Side s : kSides) {
    State& o = out.side(s);
    const State& d1h = bf.d1U.side(s);
    for (int i = 0; i < g.np1(); ++i)
      for (int j = 0; j < g.n2; ++j) {
        const double w = dpsi.at(i, j) / bf.lf.d1Phi(s, i, j);
        for (int k = 0; k < 6; ++k) o.c[k].at(i, j) -= w * d1h.c[k].at(i, j);
      }
  }
  return out;
}

StatePair good_unknown_dt(const StatePair& dtdU, const Field& dpsi, const Field& dtdpsi,
                          const BasicFrame& bf) {
  const Grid& g = *bf.grid;
  StatePair out = dtdU;
  StatePair d1dtU;
  d1dtU.plus = d1(bf.dtU.plus, g);
  d1dtU.minus = d1(bf.dtU.minus, g);
  for (Side s : kSides) {
    State& o = out.side(s);
    const State& d1h = bf.d1U.side(s);
    const State& d1dth = d1dtU.side(s);
    for (int i = 0; i < g.np1(); ++i) {
      const double chi_d = bf.lf.dchi_at(i);
      for (int j = 0; j < g.n2; ++j) {
        const double dphi1 = bf.lf.d1Phi(s, i, j);
        const double dt_d1psi_hat = chi_d * bf.dtphi[j];
        const double w = dpsi.at(i, j) / dphi1;
        const double wt = dtdpsi.at(i, j) / dphi1;
        for (int k = 0; k < 6; ++k) {
          o.c[k].at(i, j) -= wt * d1h.c[k].at(i, j);
          o.c[k].at(i, j) += w * dt_d1psi_hat / dphi1 * d1h.c[k].at(i, j);
          o.c[k].at(i, j) -= w * d1dth.c[k].at(i, j);
        }
      }
    }
  }
  return out;
}

Mat6 coefficient_matrix_at(const BasicFrame& bf, Side s, int i, int j) {
  const ThermoParams& tp = *bf.thermo;
  const Vec6 W = bf.physical(s, i, j);
  const MatrixJacobian dA = matrix_derivatives(W, tp);
  const double dtpsi = bf.lf.dtpsi.at(i, j);
  const double d2psi = bf.lf.d2psi.at(i, j);
  const double inv_d1phi = 1.0 / bf.lf.d1Phi(s, i, j);
  const Vec6 dtu = bf.dtU.side(s).at(i, j);
  const Vec6 d1u = bf.d1U.side(s).at(i, j);
  const Vec6 d2u = bf.d2U.side(s).at(i, j);
  Mat6 C;
  for (int y = 0; y < 6; ++y) {
    Vec6 col = dA[0][y] * dtu;
    Vec6 a1col = dA[1][y] * d1u;
    a1col -= dtpsi * (dA[0][y] * d1u);
    a1col -= d2psi * (dA[2][y] * d1u);
    col += inv_d1phi * a1col;
    col += dA[2][y] * d2u;
    for (int r = 0; r < 6; ++r) C(r, y) = col[r];
  }
  return C;
}

StatePair effective_operator(const BasicFrame& bf, const StatePair& Udot,
                             const StatePair& dtUdot) {
  const Grid& g = *bf.grid;
  const ThermoParams& tp = *bf.thermo;
  StatePair out(g);
  for (Side s : kSides) {
    const State d1u = d1(Udot.side(s), g);
    const State d2u = d2(Udot.side(s), g);
    State& o = out.side(s);
    for (int i = 0; i < g.np1(); ++i)
      for (int j = 0; j < g.n2; ++j) {
        const SystemMatrices m = assemble_matrices(bf.U.side(s).at(i, j), s, tp);
        const Mat6 At1 = assemble_boundary_matrix(m, bf.lf.dtpsi.at(i, j), bf.lf.d1psi.at(i, j),
                                                  bf.lf.d2psi.at(i, j), s);
        const Mat6 C = coefficient_matrix_at(bf, s, i, j);
        Vec6 r = m.A0 * dtUdot.side(s).at(i, j);
        r += At1 * d1u.at(i, j);
        r += m.A2 * d2u.at(i, j);
        r += C * Udot.side(s).at(i, j);
        o.set(i, j, r);
      }
  }
  return out;
}

BoundaryRows effective_boundary(const BasicFrame& bf, const StatePair& Udot,
                                const BdryField& dphi, const BdryField& dtdphi, double jc_tol) {
  const Grid& g = *bf.grid;
  {
    const BdryField jv1 = normal_jump(bf.U.plus.c[CV1], bf.U.minus.c[CV1], g);
    const BdryField jv2 = normal_jump(bf.U.plus.c[CV2], bf.U.minus.c[CV2], g);
    if (std::max(inf_norm(jv1), inf_norm(jv2)) > jc_tol)
      throw ValidationError("effective_boundary: basic state violates [d1 v_hat] = 0");
  }
  BoundaryRows rows;
  for (auto& r : rows) r = bdry_zero(g);
  const BdryField d2dphi = d2_bdry(dphi, g);
  for (int j = 0; j < g.n2; ++j) {
    const Vec6 up = Udot.plus.at(0, j);
    const Vec6 um = Udot.minus.at(0, j);
    const double b = bf.d2phi[j];
    rows[0][j] = up[CP] - um[CP] + dphi[j] * bf.jump_d1p[j];
    rows[1][j] = up[CV1] - um[CV1];
    rows[2][j] = up[CV2] - um[CV2];
    rows[3][j] = (up[CH1] * b + up[CH2]) - (um[CH1] * b + um[CH2]) +
                 dphi[j] * bf.jump_d1Htau[j];
    const double vNdot_p = up[CV1] - up[CV2] * b;
    rows[4][j] = dtdphi[j] + bf.v2_plus[j] * d2dphi[j] - vNdot_p - dphi[j] * bf.d1vN_plus[j];
  }
  return rows;
}

FullLinearization full_linearization(const BasicFrame& bf, const StatePair& dU,
                                     const StatePair& dtdU, const BdryField& dphi,
                                     const BdryField& dtdphi) {
  const Grid& g = *bf.grid;
  const ThermoParams& tp = *bf.thermo;
  FullLinearization out;

  // dPsi = chi dphi, lifted with the basic geometry's cutoff tables
  Field dpsi(g), dtdpsi(g);
  for (int i = 0; i < g.np1(); ++i) {
    const double c = bf.lf.chi_at(i);
    for (int j = 0; j < g.n2; ++j) {
      dpsi.at(i, j) = c * dphi[j];
      dtdpsi.at(i, j) = c * dtdphi[j];
    }
  }

  const StatePair Udot = good_unknown(dU, dpsi, bf);
  const StatePair dtUdot = good_unknown_dt(dtdU, dpsi, dtdpsi, bf);
  out.residual = effective_operator(bf, Udot, dtUdot);

  out.dropped = StatePair(g);
  for (Side s : kSides) {
    const State L = interior_residual_pre(bf.U.side(s), bf.dtU.side(s), bf.d1U.side(s),
                                          bf.d2U.side(s), bf.lf, s, tp, g);
    const State d1L = d1(L, g);
    State& o = out.dropped.side(s);
    for (int i = 0; i < g.np1(); ++i)
      for (int j = 0; j < g.n2; ++j) {
        const double w = dpsi.at(i, j) / bf.lf.d1Phi(s, i, j);
        for (int k = 0; k < 6; ++k) o.c[k].at(i, j) = w * d1L.c[k].at(i, j);
      }
    out.residual.side(s) -= o;
  }
  return out;
}

BoundaryRows boundary_derivative(const StatePair& What, const BdryField& phihat,
                                 const StatePair& dU, const BdryField& dphi,
                                 const BdryField& dtdphi, const Grid& g) {
  BoundaryRows rows;
  for (auto& r : rows) r = bdry_zero(g);
  const BdryField d2phihat = d2_bdry(phihat, g);
  const BdryField d2dphi = d2_bdry(dphi, g);
  for (int j = 0; j < g.n2; ++j) {
    const Vec6 up = dU.plus.at(0, j);
    const Vec6 um = dU.minus.at(0, j);
    const Vec6 hp = What.plus.at(0, j);
    const Vec6 hm = What.minus.at(0, j);
    const double b = d2phihat[j];
    rows[0][j] = up[CP] - um[CP];
    rows[1][j] = up[CV1] - um[CV1];
    rows[2][j] = up[CV2] - um[CV2];
    rows[3][j] = (up[CH1] - um[CH1]) * b + (up[CH2] - um[CH2]) +
                 (hp[CH1] - hm[CH1]) * d2dphi[j];
    rows[4][j] = dtdphi[j] - up[CV1] + up[CV2] * b + hp[CV2] * d2dphi[j];
  }
  return rows;
}

BoundaryRows bilinear_boundary(const StatePair& W1, const BdryField& phi1, const StatePair& W2,
                               const BdryField& phi2, const Grid& g) {
  BoundaryRows rows;
  for (auto& r : rows) r = bdry_zero(g);
  const BdryField d2p1 = d2_bdry(phi1, g);
  const BdryField d2p2 = d2_bdry(phi2, g);
  for (int j = 0; j < g.n2; ++j) {
    const double jH1_1 = W1.plus.c[CH1].at(0, j) - W1.minus.c[CH1].at(0, j);
    const double jH1_2 = W2.plus.c[CH1].at(0, j) - W2.minus.c[CH1].at(0, j);
    rows[3][j] = jH1_1 * d2p2[j] + jH1_2 * d2p1[j];
    rows[4][j] = W1.plus.c[CV2].at(0, j) * d2p2[j] + W2.plus.c[CV2].at(0, j) * d2p1[j];
  }
  return rows;
}

Mat6 char_to_primitive(double b) {
  Mat6 J = Mat6::identity();
  const double q = 1.0 / (1.0 + b * b);
  J(CV1, CV2) = b;
  J(CH1, CH1) = q;
  J(CH1, CH2) = b * q;
  J(CH2, CH1) = -b * q;
  J(CH2, CH2) = q;
  return J;
}

Mat6 char_from_primitive(double b) {
  Mat6 Ji = Mat6::identity();
  Ji(CV1, CV2) = -b;  // v_N = v1 - b v2
  Ji(CH1, CH1) = 1.0;
  Ji(CH1, CH2) = -b;  // H_N
  Ji(CH2, CH1) = b;   // H_tau
  Ji(CH2, CH2) = 1.0;
  return Ji;
}

CharacteristicState to_characteristic(const StatePair& U, const BasicFrame& bf, double kappa) {
  const Grid& g = *bf.grid;
  for (Side s : kSides) {
    const BdryField hn = bf.HN_trace(s);
    for (double x : hn)
      if (std::abs(x) < kappa / 2.0)
        throw ValidationError("to_characteristic: |H_N_hat| below kappa/2 on the interface");
  }
  CharacteristicState out;
  out.V = StatePair(g);
  for (Side s : kSides) {
    const State& u = U.side(s);
    State& v = out.V.side(s);
    for (int i = 0; i < g.np1(); ++i)
      for (int j = 0; j < g.n2; ++j) {
        const Mat6 Ji = char_from_primitive(bf.lf.d2psi.at(i, j));
        v.set(i, j, Ji * u.at(i, j));
      }
  }
  return out;
}

EigenSignature boundary_signature_at(const BasicFrame& bf, int j) {
  const Vec6 W = bf.physical(Side::Plus, 0, j);
  const Mat6 M = interface_boundary_matrix(W[CH1], W[CH2], bf.d2phi[j], Side::Plus);
  std::array<double, 6> ev{};
  sym_eigen6(M, ev);
  return eigen_signature(ev, 1e-10 * std::max(M.inf_norm(), 1e-30));
}

EigenSignature boundary_signature(const BasicFrame& bf) {
  const Grid& g = *bf.grid;
  EigenSignature sig = boundary_signature_at(bf, 0);
  for (int j = 1; j < g.n2; ++j) {
    if (!(boundary_signature_at(bf, j) == sig))
      throw ValidationError("boundary_signature: signature varies along the interface");
  }
  return sig;
}

}  // namespace cmhd
