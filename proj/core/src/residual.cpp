#include "cmhd/residual.hpp"

namespace cmhd {

State interior_residual_pre(const State& U, const State& dtU, const State& d1U, const State& d2U,
                            const LiftedFront& lf, Side side, const ThermoParams& tp,
                            const Grid& g) {
  State out(g);
  for (int i = 0; i < g.np1(); ++i) {
    for (int j = 0; j < g.n2; ++j) {
      const SystemMatrices m = assemble_matrices(U.at(i, j), side, tp);
      const Mat6 At1 = assemble_boundary_matrix(m, lf.dtpsi.at(i, j), lf.d1psi.at(i, j),
                                                lf.d2psi.at(i, j), side);
      Vec6 r = m.A0 * dtU.at(i, j);
      r += At1 * d1U.at(i, j);
      r += m.A2 * d2U.at(i, j);
      out.set(i, j, r);
    }
  }
  return out;
}

State interior_residual(const State& U, const State& dtU, const LiftedFront& lf, Side side,
                        const ThermoParams& tp, const Grid& g) {
  return interior_residual_pre(U, dtU, d1(U, g), d2(U, g), lf, side, tp, g);
}

BoundaryResidual boundary_residual(const StatePair& U, const BdryField& phi,
                                   const BdryField& dtphi, const Grid& g) {
  BoundaryResidual br;
  const BdryField d2phi = d2_bdry(phi, g);
  for (auto& r : br.row) r = bdry_zero(g);
  for (int j = 0; j < g.n2; ++j) {
    const Vec6 up = U.plus.at(0, j);
    const Vec6 um = U.minus.at(0, j);
    const double b = d2phi[j];  // d2Psi(0) = d2phi on both sides
    br.row[0][j] = up[CP] - um[CP];
    br.row[1][j] = up[CV1] - um[CV1];
    br.row[2][j] = up[CV2] - um[CV2];
    br.row[3][j] = (up[CH1] * b + up[CH2]) - (um[CH1] * b + um[CH2]);
    br.row[4][j] = dtphi[j] - (up[CV1] - up[CV2] * b);
  }
  return br;
}

}  // namespace cmhd
