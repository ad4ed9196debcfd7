#pragma once

#include "cmhd/grid.hpp"
#include "cmhd/smallmat.hpp"
#include "cmhd/thermo.hpp"

namespace cmhd {

/// Symmetrized coefficient matrices at one point. `hyperbolic` is false when
/// the assembly point violates the strict pressure bound; the matrices are
/// still filled so callers can decide what to do.
struct SystemMatrices {
  Mat6 A0, A1, A2;
  bool hyperbolic = true;
};

/// Assembly from the physical (unshifted) point value W = (p, v, H, S).
SystemMatrices assemble_matrices_physical(const Vec6& W, const ThermoParams& tp);

/// Assembly from a stored (shifted) state; the side's background shift is
/// added internally. Hyperbolicity flag uses the strict iterate bound.
SystemMatrices assemble_matrices(const Vec6& U_stored, Side side, const ThermoParams& tp);

/// A1_tilde = (A1 - A0 dtPsi - A2 d2Psi) / d1Phi for one side,
/// d1Phi = side_sign + d1Psi. Throws on |d1Phi| < 1/2.
Mat6 assemble_boundary_matrix(const SystemMatrices& m, double dtPsi, double d1Psi, double d2Psi,
                              Side side);

/// Partial derivatives dA_alpha/dW_j of the coefficient matrices with respect
/// to the six physical components, at the point W. Index [alpha][j] with
/// alpha in {0,1,2}.
using MatrixJacobian = std::array<std::array<Mat6, 6>, 3>;
MatrixJacobian matrix_derivatives(const Vec6& W, const ThermoParams& tp);

/// The exact interface form of the boundary matrix (up to the overall side
/// sign), built from the basic-state trace values (H1, H2) and d2phi.
Mat6 interface_boundary_matrix(double H1, double H2, double d2phi, Side side);

}  // namespace cmhd
