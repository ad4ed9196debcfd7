#include "cmhd/matrices.hpp"

#include <cmath>

namespace cmhd {

SystemMatrices assemble_matrices_physical(const Vec6& W, const ThermoParams& tp) {
  SystemMatrices out;
  const double p = W[CP], v1 = W[CV1], v2 = W[CV2];
  const double H1 = W[CH1], H2 = W[CH2], S = W[CS];
  out.hyperbolic = p > 0;
  // keep assembly defined for mildly negative p so callers can flag instead
  // of crash; 1/(gamma p) still needs p != 0
  const double gp = tp.gamma * p;
  const double a = 1.0 / gp;
  const double rho = out.hyperbolic ? density(p, S, tp)
                                    : tp.A * std::pow(std::abs(p), 1.0 / tp.gamma) *
                                          std::exp(-S / tp.gamma);

  Vec6 d0;
  d0[CP] = a;
  d0[CV1] = rho;
  d0[CV2] = rho;
  d0[CH1] = 1.0;
  d0[CH2] = 1.0;
  d0[CS] = 1.0;
  out.A0 = Mat6::diag(d0);

  Mat6& A1 = out.A1;
  A1(CP, CP) = v1 * a;
  A1(CP, CV1) = 1.0;
  A1(CV1, CP) = 1.0;
  A1(CV1, CV1) = rho * v1;
  A1(CV1, CH2) = H2;
  A1(CV2, CV2) = rho * v1;
  A1(CV2, CH2) = -H1;
  A1(CH1, CH1) = v1;
  A1(CH2, CV1) = H2;
  A1(CH2, CV2) = -H1;
  A1(CH2, CH2) = v1;
  A1(CS, CS) = v1;

  Mat6& A2 = out.A2;
  A2(CP, CP) = v2 * a;
  A2(CP, CV2) = 1.0;
  A2(CV1, CV1) = rho * v2;
  A2(CV1, CH1) = -H2;
  A2(CV2, CP) = 1.0;
  A2(CV2, CV2) = rho * v2;
  A2(CV2, CH1) = H1;
  A2(CH1, CV1) = -H2;
  A2(CH1, CV2) = H1;
  A2(CH1, CH1) = v2;
  A2(CH2, CH2) = v2;
  A2(CS, CS) = v2;

  return out;
}

SystemMatrices assemble_matrices(const Vec6& U_stored, Side side, const ThermoParams& tp) {
  SystemMatrices m = assemble_matrices_physical(physical_state(U_stored, side, tp), tp);
  m.hyperbolic = hyperbolic_strict(U_stored[CP], tp);
  return m;
}

Mat6 assemble_boundary_matrix(const SystemMatrices& m, double dtPsi, double d1Psi, double d2Psi,
                              Side side) {
  const double d1Phi = side_sign(side) + d1Psi;
  if (std::abs(d1Phi) < 0.5)
    throw ValidationError("assemble_boundary_matrix: degenerate geometry, |d1Phi| < 1/2");
  Mat6 r = m.A1;
  r -= dtPsi * m.A0;
  r -= d2Psi * m.A2;
  r *= 1.0 / d1Phi;
  return r;
}

MatrixJacobian matrix_derivatives(const Vec6& W, const ThermoParams& tp) {
  MatrixJacobian J{};
  const double p = W[CP], v1 = W[CV1], v2 = W[CV2], S = W[CS];
  const double gp = tp.gamma * p;
  const double a = 1.0 / gp;
  const double rho = density(p, S, tp);
  const double rho_p = rho / gp;          // drho/dp
  const double rho_S = -rho / tp.gamma;   // drho/dS
  const double da_dp = -a / p;            // d(1/(gamma p))/dp

  // A0 = diag(a, rho, rho, 1, 1, 1)
  {
    Mat6& dp = J[0][CP];
    dp(CP, CP) = da_dp;
    dp(CV1, CV1) = rho_p;
    dp(CV2, CV2) = rho_p;
    Mat6& dS = J[0][CS];
    dS(CV1, CV1) = rho_S;
    dS(CV2, CV2) = rho_S;
  }
  // A1
  {
    Mat6& dp = J[1][CP];
    dp(CP, CP) = v1 * da_dp;
    dp(CV1, CV1) = rho_p * v1;
    dp(CV2, CV2) = rho_p * v1;
    Mat6& dv1 = J[1][CV1];
    dv1(CP, CP) = a;
    dv1(CV1, CV1) = rho;
    dv1(CV2, CV2) = rho;
    dv1(CH1, CH1) = 1.0;
    dv1(CH2, CH2) = 1.0;
    dv1(CS, CS) = 1.0;
    Mat6& dH1 = J[1][CH1];
    dH1(CV2, CH2) = -1.0;
    dH1(CH2, CV2) = -1.0;
    Mat6& dH2 = J[1][CH2];
    dH2(CV1, CH2) = 1.0;
    dH2(CH2, CV1) = 1.0;
    Mat6& dS = J[1][CS];
    dS(CV1, CV1) = rho_S * v1;
    dS(CV2, CV2) = rho_S * v1;
  }
  // A2
  {
    Mat6& dp = J[2][CP];
    dp(CP, CP) = v2 * da_dp;
    dp(CV1, CV1) = rho_p * v2;
    dp(CV2, CV2) = rho_p * v2;
    Mat6& dv2 = J[2][CV2];
    dv2(CP, CP) = a;
    dv2(CV1, CV1) = rho;
    dv2(CV2, CV2) = rho;
    dv2(CH1, CH1) = 1.0;
    dv2(CH2, CH2) = 1.0;
    dv2(CS, CS) = 1.0;
    Mat6& dH1 = J[2][CH1];
    dH1(CV2, CH1) = 1.0;
    dH1(CH1, CV2) = 1.0;
    Mat6& dH2 = J[2][CH2];
    dH2(CV1, CH1) = -1.0;
    dH2(CH1, CV1) = -1.0;
    Mat6& dS = J[2][CS];
    dS(CV1, CV1) = rho_S * v2;
    dS(CV2, CV2) = rho_S * v2;
  }
  return J;
}

Mat6 interface_boundary_matrix(double H1, double H2, double d2phi, Side side) {
  Mat6 m;
  const double b = d2phi;
  m(CP, CV1) = 1.0;
  m(CP, CV2) = -b;
  m(CV1, CP) = 1.0;
  m(CV1, CH1) = H2 * b;
  m(CV1, CH2) = H2;
  m(CV2, CP) = -b;
  m(CV2, CH1) = -H1 * b;
  m(CV2, CH2) = -H1;
  m(CH1, CV1) = H2 * b;
  m(CH1, CV2) = -H1 * b;
  m(CH2, CV1) = H2;
  m(CH2, CV2) = -H1;
  m *= side_sign(side);
  return m;
}

}  // namespace cmhd
