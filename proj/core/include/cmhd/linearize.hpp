#pragma once

#include "cmhd/basic_state.hpp"

namespace cmhd {

using BoundaryRows = std::array<BdryField, 5>;

double rows_inf_norm(const BoundaryRows& r);

/// Lift of a front perturbation: dPsi = chi * dphi (same field both sides).
Field lift_perturbation(const BdryField& dphi, const Cutoff& chi, const Grid& g);

/// Alinhac's good unknown: Udot = dU - (dPsi / d1Phi_hat) d1U_hat.
StatePair good_unknown(const StatePair& dU, const Field& dpsi, const BasicFrame& bf);

/// Time derivative of the good unknown by the product rule in t
/// (pointwise in space, so exact):
///   dtUdot = dt dU - (dt dPsi / d1Phi) d1U_hat
///            + (dPsi dt d1Psi_hat / d1Phi^2) d1U_hat - (dPsi / d1Phi) d1(dtU_hat).
StatePair good_unknown_dt(const StatePair& dtdU, const Field& dpsi, const Field& dtdpsi,
                          const BasicFrame& bf);

/// Zeroth-order coefficient matrix C(U_hat, Psi_hat) of the effective
/// operator, built from the closed-form matrix derivatives contracted with
/// the basic-state gradients.
Mat6 coefficient_matrix_at(const BasicFrame& bf, Side s, int i, int j);

/// Effective interior operator L'_e applied to (Udot, dtUdot).
StatePair effective_operator(const BasicFrame& bf, const StatePair& Udot,
                             const StatePair& dtUdot);

/// Effective boundary operator B'_e; rows
///  (pdot jump + phi [d1 p_hat], v1dot jump, v2dot jump,
///   Htaudot jump + phi [d1 Htau_hat],
///   dtphi + v2_hat^+ d2phi - vNdot^+ - phi d1 vN_hat^+).
/// Requires the basic state to satisfy [d1 v_hat] = 0; checked against
/// jc_tol.
BoundaryRows effective_boundary(const BasicFrame& bf, const StatePair& Udot,
                                const BdryField& dphi, const BdryField& dtdphi,
                                double jc_tol = 1e-6);

/// Full linearization in the good unknown, exposing the zeroth-order term
/// that the effective operator drops:
///   residual = L'_e(Udot) - dropped,
///   dropped  = (dPsi / d1Phi_hat) d1{ L(U_hat, Psi_hat) }.
struct FullLinearization {
  StatePair residual;
  StatePair dropped;
};
FullLinearization full_linearization(const BasicFrame& bf, const StatePair& dU,
                                     const StatePair& dtdU, const BdryField& dphi,
                                     const BdryField& dtdphi);

/// First derivative of the nonlinear boundary operator at base traces
/// (W_hat, phi_hat); exact to quadratic order together with
/// bilinear_boundary.
BoundaryRows boundary_derivative(const StatePair& What, const BdryField& phihat,
                                 const StatePair& dU, const BdryField& dphi,
                                 const BdryField& dtdphi, const Grid& g);

/// Second derivative of the boundary operator (state independent):
/// rows 1-3 zero, row 4 = [H1'] d2phi'' + [H1''] d2phi',
/// row 5 = v2'^+ d2phi'' + v2''^+ d2phi'.
BoundaryRows bilinear_boundary(const StatePair& W1, const BdryField& phi1, const StatePair& W2,
                               const BdryField& phi2, const Grid& g);

// --- characteristic form -------------------------------------------------

/// U = J V with V = (p, v_N, v2, H_N, H_tau, S).
Mat6 char_to_primitive(double d2psi);
Mat6 char_from_primitive(double d2psi);

struct CharacteristicState {
  StatePair V;
};
/// Pointwise transform V = J^{-1} U; requires |H_N_hat| >= kappa/2 on the
/// interface.
CharacteristicState to_characteristic(const StatePair& U, const BasicFrame& bf, double kappa);

/// Eigenvalue signature of the exact interface boundary matrix at one x2
/// node (plus side display). Zero threshold is 1e-10 * ||M||.
EigenSignature boundary_signature_at(const BasicFrame& bf, int j);
/// Worst-case over the interface; also verifies rank 4.
EigenSignature boundary_signature(const BasicFrame& bf);

}  // namespace cmhd
