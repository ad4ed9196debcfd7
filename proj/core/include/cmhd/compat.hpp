#pragma once

#include "cmhd/basic_state.hpp"
#include "cmhd/norms.hpp"

namespace cmhd {

/// Time-derivative traces at t = 0: U^{(j)} and phi^{(j)} for j = 0..mu,
/// with phi carried one order further (the front lifting needs it), and the
/// binomial-expanded H_N / H_tau trace jets.
struct TaylorJet {
  int mu = 0;
  std::vector<StatePair> U;        // 0..mu
  std::vector<BdryField> phi;      // 0..mu+1
  std::vector<BdryField> HN_plus, HN_minus;    // 0..mu
  std::vector<BdryField> Htau_plus, Htau_minus;
  double M0 = 0;  // recorded data norm
};

/// Recursively computes the jet from the initial data by differentiating the
/// interior systems and the front equation in time; all products expand by
/// the Leibniz rule on discrete fields.
TaylorJet jet_recursion(const StatePair& U0, const BdryField& phi0, int mu,
                        const ThermoParams& tp, const Cutoff& chi, const Grid& g);

struct CompatReport {
  int mu = 0;
  // per order: inf norms of [p^{(j)}], [v1^{(j)}], [v2^{(j)}], [Htau^{(j)}]
  std::vector<std::array<double, 4>> cond;
  std::vector<double> hn_jump;  // derived [H_N^{(j)}]
  double d1vN_jump = 0;         // derived [d1 v_N^{(0)}]
  double d1v1_jump = 0, d1v2_jump = 0;

  double max_condition() const;
  bool compatible(double tol) const;
  bool derived_ok(double tol) const;
};

CompatReport compat_check(const TaylorJet& jet, const Grid& g, double tol = 1e-8);

/// Slab extension of compatible data: Taylor polynomial in t (times an
/// implicit temporal cutoff that equals 1 on t >= 0 and dies out in the
/// past), with the interface conditions enforced exactly by cutoff lifts of
/// the jump-free combinations. Evaluation is analytic in t, discrete in x.
class ApproxSolution {
 public:
  double T = 0;
  std::vector<StatePair> coef;    // derivative-jet coefficients, 0..K
  std::vector<BdryField> phico;   // front jet, 0..mu+1
  ThermoParams thermo;
  Cutoff cutoff;
  Grid grid;

  int degree() const { return static_cast<int>(coef.size()) - 1; }
  StatePair state(double t) const;
  StatePair state_dt(double t, int m = 1) const;
  BdryField front(double t) const;
  BdryField front_dt(double t, int m = 1) const;
  LiftedFront lift(double t) const;

  /// Interior operator L(U^a, Psi^a) at time t (analytic dt, stencil dx).
  StatePair interior_op(double t) const;
  /// f^a(t) = -L(U^a, Psi^a) for t > 0, zero for t <= 0.
  StatePair forcing(double t) const;
  SlabPair forcing_slab(int m, double dt) const;
  /// Coefficient frame at time t for linearization around U^a.
  BasicFrame frame(double t) const;
  /// Boundary operator residual of the approximate solution at time t.
  BoundaryResidual boundary_residual_at(double t) const;
};

/// Builds the approximate solution; refuses jets that are not compatible up
/// to their order (the boundary-respecting lifting needs compatibility).
ApproxSolution build_approximate(const TaylorJet& jet, double T, const ThermoParams& tp,
                                 const Cutoff& chi, const Grid& g, double compat_tol = 1e-8);

/// Projects raw data onto the order-mu compatibility manifold by Newton
/// correction of the minus-side traces (plus [H_N^{(0)}] = 0); test utility.
struct CompatibleDataResult {
  StatePair U0;
  BdryField phi0;
  int newton_sweeps = 0;
  double residual = 0;
};
CompatibleDataResult make_compatible(const StatePair& raw, const BdryField& phi0, int mu,
                                     const ThermoParams& tp, const Cutoff& chi, const Grid& g,
                                     double tol = 1e-10, int max_sweeps = 30);

/// Structured text export of a jet (one block per order).
void export_jet(const TaylorJet& jet, const std::string& path, const Grid& g);

}  // namespace cmhd
