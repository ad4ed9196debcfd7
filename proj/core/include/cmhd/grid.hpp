#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cmhd/smallmat.hpp"

namespace cmhd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : Error {
  using Error::Error;
};

/// Fixed computational strip [0, a_wall] x T. x1 carries n1 cells (n1+1 nodes,
/// interface collocated at node 0, rigid wall at node n1); x2 carries n2
/// periodic nodes on the unit torus.
struct Grid {
  int n1 = 32;
  int n2 = 32;
  double a_wall = 6.0;
  double cfl = 0.4;

  int np1() const { return n1 + 1; }
  double dx1() const { return a_wall / n1; }
  double dx2() const { return 1.0 / n2; }
  double x1(int i) const { return i * dx1(); }
  double x2(int j) const { return j * dx2(); }
  std::size_t nodes() const { return static_cast<std::size_t>(np1()) * n2; }

  void validate() const {
    if (n1 < 8 || n2 < 8) throw ValidationError("grid: n1 and n2 must be >= 8");
    if (a_wall <= 0) throw ValidationError("grid: a_wall must be positive");
    if (cfl <= 0 || cfl > 1) throw ValidationError("grid: cfl must lie in (0,1]");
  }
  bool operator==(const Grid&) const = default;
};

/// Scalar field on the grid nodes, row major over (i1, i2).
struct Field {
  int np1 = 0, n2 = 0;
  std::vector<double> v;

  Field() = default;
  explicit Field(const Grid& g) : np1(g.np1()), n2(g.n2), v(g.nodes(), 0.0) {}
  Field(int np1_, int n2_) : np1(np1_), n2(n2_), v(static_cast<std::size_t>(np1_) * n2_, 0.0) {}

  double& at(int i, int j) { return v[static_cast<std::size_t>(i) * n2 + j]; }
  double at(int i, int j) const { return v[static_cast<std::size_t>(i) * n2 + j]; }
  std::size_t size() const { return v.size(); }
  bool same_shape(const Field& o) const { return np1 == o.np1 && n2 == o.n2; }

  Field& operator+=(const Field& o) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += o.v[k];
    return *this;
  }
  Field& operator-=(const Field& o) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= o.v[k];
    return *this;
  }
  Field& operator*=(double s) {
    for (double& x : v) x *= s;
    return *this;
  }
  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(double s, Field a) { return a *= s; }

  double inf_norm() const;
};

/// Scalar function of x2 on the boundary line (periodic nodes).
using BdryField = std::vector<double>;

BdryField bdry_zero(const Grid& g);

// Derivative stencils. Interior x1 rows use 4th-order central differences,
// the two rows nearest each end fall back to 2nd order (one-sided at the
// ends themselves). x2 is periodic 4th-order central throughout.
Field d1(const Field& f, const Grid& g);
Field d2(const Field& f, const Grid& g);
BdryField d2_bdry(const BdryField& f, const Grid& g);

/// Trace of a field on the interface line x1 = 0.
BdryField trace0(const Field& f);
/// One-sided 2nd-order normal derivative trace at x1 = 0.
BdryField d1_trace0(const Field& f, const Grid& g);

// Component ordering of the primitive unknown.
enum Comp : int { CP = 0, CV1 = 1, CV2 = 2, CH1 = 3, CH2 = 4, CS = 5 };

enum class Side : int { Plus = 0, Minus = 1 };
inline double side_sign(Side s) { return s == Side::Plus ? 1.0 : -1.0; }
inline const char* side_name(Side s) { return s == Side::Plus ? "plus" : "minus"; }
constexpr std::array<Side, 2> kSides = {Side::Plus, Side::Minus};

/// One side's primitive unknown: six scalar fields.
struct State {
  std::array<Field, 6> c;

  State() = default;
  explicit State(const Grid& g) {
    for (auto& f : c) f = Field(g);
  }
  Vec6 at(int i, int j) const {
    Vec6 u;
    for (int k = 0; k < 6; ++k) u[k] = c[k].at(i, j);
    return u;
  }
  void set(int i, int j, const Vec6& u) {
    for (int k = 0; k < 6; ++k) c[k].at(i, j) = u[k];
  }
  State& operator+=(const State& o) {
    for (int k = 0; k < 6; ++k) c[k] += o.c[k];
    return *this;
  }
  State& operator-=(const State& o) {
    for (int k = 0; k < 6; ++k) c[k] -= o.c[k];
    return *this;
  }
  State& operator*=(double s) {
    for (auto& f : c) f *= s;
    return *this;
  }
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(double s, State a) { return a *= s; }
  double inf_norm() const;
};

/// Plus/minus pair of states.
struct StatePair {
  State plus, minus;

  StatePair() = default;
  explicit StatePair(const Grid& g) : plus(g), minus(g) {}
  State& side(Side s) { return s == Side::Plus ? plus : minus; }
  const State& side(Side s) const { return s == Side::Plus ? plus : minus; }

  StatePair& operator+=(const StatePair& o) {
    plus += o.plus;
    minus += o.minus;
    return *this;
  }
  StatePair& operator-=(const StatePair& o) {
    plus -= o.plus;
    minus -= o.minus;
    return *this;
  }
  StatePair& operator*=(double s) {
    plus *= s;
    minus *= s;
    return *this;
  }
  friend StatePair operator+(StatePair a, const StatePair& b) { return a += b; }
  friend StatePair operator-(StatePair a, const StatePair& b) { return a -= b; }
  friend StatePair operator*(double s, StatePair a) { return a *= s; }
  double inf_norm() const { return std::max(plus.inf_norm(), minus.inf_norm()); }
};

// Derivatives applied component-wise.
State d1(const State& s, const Grid& g);
State d2(const State& s, const Grid& g);

}  // namespace cmhd
