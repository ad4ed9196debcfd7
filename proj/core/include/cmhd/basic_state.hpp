#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cmhd/front.hpp"
#include "cmhd/matrices.hpp"
#include "cmhd/residual.hpp"

namespace cmhd {

/// Everything needed to assemble the linearized operators at one instant:
/// the (shifted) basic state, its derivative fields, and the lifted front.
struct BasicFrame {
  StatePair U;     // hat state, stored shifted
  StatePair dtU;   // time derivative of the hat state
  StatePair d1U;   // stencil x1 derivative
  StatePair d2U;   // stencil x2 derivative
  BdryField phi;
  BdryField dtphi;
  LiftedFront lf;

  // interface coefficient traces used by the effective boundary operator
  BdryField jump_d1p;     // [d1 p_hat], sum convention
  BdryField jump_d1Htau;  // [d1 Htau_hat]
  BdryField d1vN_plus;    // d1 v_N_hat^+ trace
  BdryField v2_plus;      // v2_hat^+ trace
  BdryField d2phi;

  void finalize(const Grid& g, const ThermoParams& tp);
  const ThermoParams* thermo = nullptr;
  const Grid* grid = nullptr;

  /// Physical point value (shift added back).
  Vec6 physical(Side s, int i, int j) const { return physical_state(U.side(s).at(i, j), s, *thermo); }
  /// Trace of H_N_hat on the interface for one side.
  BdryField HN_trace(Side s) const;
};

struct ConstraintReport {
  double bc_p = 0, bc_v1 = 0, bc_v2 = 0, bc_Htau = 0, bc_front = 0;  // a12' residual norms
  double jump_d1v = 0;       // ||[d1 v_hat]||_inf (both components)
  double min_HN = 0;         // min over boundary of |H_N_hat|
  double min_p_margin = 0;   // min over domain of (p_hat + p_bar/2)
  double min_rt = 0;         // min over boundary of [d1 p_hat]
  bool ok(double tol, double kappa, double eps, bool require_rt) const;
  std::string describe() const;
};

/// Checks the basic-state constraints (boundary conditions, relaxed
/// hyperbolicity, magnetic-field threshold, velocity normal-jump condition,
/// and optionally the Rayleigh-Taylor sign) on one frame.
ConstraintReport check_basic_state(const BasicFrame& f, const Grid& g, const ThermoParams& tp);

/// Frozen state around which linearization is performed, with recorded
/// norms and thresholds.
struct BasicState {
  StatePair U;
  BdryField phi;
  BdryField dtphi;
  ThermoParams thermo;
  double kappa = 0.1;
  double eps = 0.1;
  double tol = 1e-8;
  bool require_rt = true;

  double bound_w2inf = 0;  // recorded W^{2,inf} bound (K)
  double bound_h2 = 0;     // recorded discrete Sobolev bound (K_hat proxy)

  BasicFrame make_frame(const Grid& g, const Cutoff& chi) const;
  /// Validates all invariants; throws ValidationError on failure.
  void validate(const Grid& g, const Cutoff& chi) const;
};

/// Time-dependent coefficient source for the linearized solver.
class BasicProvider {
 public:
  virtual ~BasicProvider() = default;
  virtual BasicFrame frame(double t) const = 0;
  /// Conservative bound on the fastest characteristic speed (for CFL).
  virtual double max_speed() const = 0;
};

/// Provider wrapping a time-independent basic state.
class StaticBasicProvider final : public BasicProvider {
 public:
  StaticBasicProvider(const BasicState& bs, const Grid& g, const Cutoff& chi);
  BasicFrame frame(double) const override { return frame_; }
  double max_speed() const override { return max_speed_; }
  const BasicFrame& frame0() const { return frame_; }

 private:
  BasicFrame frame_;
  double max_speed_ = 0;
};

/// Fastest signal speed estimate over a frame (advection plus fast
/// magnetosonic, with the straightening metric folded in).
double frame_max_speed(const BasicFrame& f, const Grid& g, const ThermoParams& tp);

}  // namespace cmhd
