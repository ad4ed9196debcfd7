#pragma once

#include "cmhd/front.hpp"
#include "cmhd/matrices.hpp"

namespace cmhd {

/// Nonlinear interior operator for one side:
///   A0(U+shift) dtU + A1_tilde(U+shift, Psi) d1U + A2(U+shift) d2U,
/// with d1U, d2U formed by the module's stencils and dtU supplied by the
/// caller (discrete stencil in time, or analytic for polynomial slabs).
State interior_residual(const State& U, const State& dtU, const LiftedFront& lf, Side side,
                        const ThermoParams& tp, const Grid& g);

/// Same with precomputed spatial derivatives (used by operator algebra that
/// must stay stencil-consistent with the caller).
State interior_residual_pre(const State& U, const State& dtU, const State& d1U, const State& d2U,
                            const LiftedFront& lf, Side side, const ThermoParams& tp,
                            const Grid& g);

/// The five boundary conditions evaluated on traces:
/// ([p], [v1], [v2], [H_tau], dtphi - v_N^+|x1=0).
struct BoundaryResidual {
  std::array<BdryField, 5> row;
  double inf_norm() const {
    double m = 0;
    for (const auto& r : row)
      for (double x : r) m = std::max(m, std::abs(x));
    return m;
  }
};

BoundaryResidual boundary_residual(const StatePair& U, const BdryField& phi,
                                   const BdryField& dtphi, const Grid& g);

}  // namespace cmhd
