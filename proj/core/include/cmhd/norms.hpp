#pragma once

#include "cmhd/grid.hpp"

namespace cmhd {

/// Scalar slab: time series of fields at uniform spacing dt, representing a
/// function on [0, T] that vanishes identically for t < 0.
struct Slab {
  double dt = 0;
  std::vector<Field> t;

  int steps() const { return static_cast<int>(t.size()) - 1; }
  static Slab zeros(const Grid& g, int m, double dt);
  Slab& operator+=(const Slab& o);
  Slab& operator-=(const Slab& o);
  Slab& operator*=(double s);
  friend Slab operator+(Slab a, const Slab& b) { return a += b; }
  friend Slab operator-(Slab a, const Slab& b) { return a -= b; }
  friend Slab operator*(double s, Slab a) { return a *= s; }
};

struct SlabPair {
  double dt = 0;
  std::vector<StatePair> t;

  int steps() const { return static_cast<int>(t.size()) - 1; }
  static SlabPair zeros(const Grid& g, int m, double dt);
  SlabPair& operator+=(const SlabPair& o);
  SlabPair& operator-=(const SlabPair& o);
  SlabPair& operator*=(double s);
  friend SlabPair operator+(SlabPair a, const SlabPair& b) { return a += b; }
  friend SlabPair operator-(SlabPair a, const SlabPair& b) { return a -= b; }
  friend SlabPair operator*(double s, SlabPair a) { return a *= s; }
  double inf_norm() const;
};

struct SlabBdry {
  double dt = 0;
  std::vector<BdryField> t;

  int steps() const { return static_cast<int>(t.size()) - 1; }
  static SlabBdry zeros(const Grid& g, int m, double dt);
  SlabBdry& operator+=(const SlabBdry& o);
  SlabBdry& operator-=(const SlabBdry& o);
  SlabBdry& operator*=(double s);
  friend SlabBdry operator+(SlabBdry a, const SlabBdry& b) { return a += b; }
  friend SlabBdry operator-(SlabBdry a, const SlabBdry& b) { return a -= b; }
  friend SlabBdry operator*(double s, SlabBdry a) { return a *= s; }
};

struct SlabRows {
  double dt = 0;
  std::vector<std::array<BdryField, 5>> t;
  static SlabRows zeros(const Grid& g, int m, double dt);
  SlabRows& operator+=(const SlabRows& o);
  SlabRows& operator-=(const SlabRows& o);
  SlabRows& operator*=(double s);
  friend SlabRows operator+(SlabRows a, const SlabRows& b) { return a += b; }
  friend SlabRows operator-(SlabRows a, const SlabRows& b) { return a -= b; }
};

// L2 norms with grid weights.
double l2_norm(const Field& f, const Grid& g);
double l2_norm(const State& s, const Grid& g);
double l2_norm(const StatePair& s, const Grid& g);
double l2_norm(const Slab& u, const Grid& g);
double l2_norm(const SlabPair& u, const Grid& g);
double l2_norm(const SlabBdry& u, const Grid& g);
double l2_norm(const SlabRows& u, const Grid& g);

// Discrete time derivative on a slab: 4th-order central where possible,
// exploiting the vanishing past (samples below t=0 are zeros), one-sided at
// the right end.
Slab slab_dt(const Slab& u, bool vanishes_in_past = true);
SlabPair slab_dt(const SlabPair& u, bool vanishes_in_past = true);
SlabBdry slab_dt(const SlabBdry& u, bool vanishes_in_past = true);

// Discrete Sobolev norms: sums of L2 norms of all mixed finite-difference
// derivatives of total order <= s.
double hs_norm(const Slab& u, const Grid& g, int s, bool vanishes_in_past = true);
double hs_norm(const SlabPair& u, const Grid& g, int s, bool vanishes_in_past = true);
double hs_norm(const SlabBdry& u, const Grid& g, int s, bool vanishes_in_past = true);
double hs_norm(const SlabRows& u, const Grid& g, int s, bool vanishes_in_past = true);

/// Spatial-only H^s norm of one field (no time direction).
double hs_norm_spatial(const Field& f, const Grid& g, int s);
double hs_norm_spatial(const StatePair& f, const Grid& g, int s);
double hs_norm_spatial(const BdryField& f, const Grid& g, int s);

/// Discrete W^{2,inf}: max over derivatives of order <= 2.
double w2inf_norm(const StatePair& f, const Grid& g);

}  // namespace cmhd
