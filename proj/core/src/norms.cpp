#include "cmhd/norms.hpp"

#include <cmath>

#include "cmhd/front.hpp"

namespace cmhd {

Slab Slab::zeros(const Grid& g, int m, double dt) {
  Slab s;
  s.dt = dt;
  s.t.assign(static_cast<std::size_t>(m) + 1, Field(g));
  return s;
}
Slab& Slab::operator+=(const Slab& o) {
  for (std::size_t k = 0; k < t.size(); ++k) t[k] += o.t[k];
  return *this;
}
Slab& Slab::operator-=(const Slab& o) {
  for (std::size_t k = 0; k < t.size(); ++k) t[k] -= o.t[k];
  return *this;
}
Slab& Slab::operator*=(double s) {
  for (auto& f : t) f *= s;
  return *this;
}

SlabPair SlabPair::zeros(const Grid& g, int m, double dt) {
  SlabPair s;
  s.dt = dt;
  s.t.assign(static_cast<std::size_t>(m) + 1, StatePair(g));
  return s;
}
SlabPair& SlabPair::operator+=(const SlabPair& o) {
  for (std::size_t k = 0; k < t.size(); ++k) t[k] += o.t[k];
  return *this;
}
SlabPair& SlabPair::operator-=(const SlabPair& o) {
  for (std::size_t k = 0; k < t.size(); ++k) t[k] -= o.t[k];
  return *this;
}
SlabPair& SlabPair::operator*=(double s) {
  for (auto& f : t) f *= s;
  return *this;
}
double SlabPair::inf_norm() const {
  double m = 0;
  for (const auto& f : t) m = std::max(m, f.inf_norm());
  return m;
}

SlabBdry SlabBdry::zeros(const Grid& g, int m, double dt) {
  SlabBdry s;
  s.dt = dt;
  s.t.assign(static_cast<std::size_t>(m) + 1, bdry_zero(g));
  return s;
}
SlabBdry& SlabBdry::operator+=(const SlabBdry& o) {
  for (std::size_t k = 0; k < t.size(); ++k)
    for (std::size_t j = 0; j < t[k].size(); ++j) t[k][j] += o.t[k][j];
  return *this;
}
SlabBdry& SlabBdry::operator-=(const SlabBdry& o) {
  for (std::size_t k = 0; k < t.size(); ++k)
    for (std::size_t j = 0; j < t[k].size(); ++j) t[k][j] -= o.t[k][j];
  return *this;
}
SlabBdry& SlabBdry::operator*=(double s) {
  for (auto& f : t)
    for (double& x : f) x *= s;
  return *this;
}

SlabRows SlabRows::zeros(const Grid& g, int m, double dt) {
  SlabRows s;
  s.dt = dt;
  std::array<BdryField, 5> z;
  for (auto& r : z) r = bdry_zero(g);
  s.t.assign(static_cast<std::size_t>(m) + 1, z);
  return s;
}
SlabRows& SlabRows::operator+=(const SlabRows& o) {
  for (std::size_t k = 0; k < t.size(); ++k)
    for (int r = 0; r < 5; ++r)
      for (std::size_t j = 0; j < t[k][r].size(); ++j) t[k][r][j] += o.t[k][r][j];
  return *this;
}
SlabRows& SlabRows::operator-=(const SlabRows& o) {
  for (std::size_t k = 0; k < t.size(); ++k)
    for (int r = 0; r < 5; ++r)
      for (std::size_t j = 0; j < t[k][r].size(); ++j) t[k][r][j] -= o.t[k][r][j];
  return *this;
}
SlabRows& SlabRows::operator*=(double s) {
  for (auto& row : t)
    for (auto& r : row)
      for (double& x : r) x *= s;
  return *this;
}

double l2_norm(const Field& f, const Grid& g) {
  double s = 0;
  for (double x : f.v) s += x * x;
  return std::sqrt(s * g.dx1() * g.dx2());
}
double l2_norm(const State& st, const Grid& g) {
  double s = 0;
  for (const auto& f : st.c)
    for (double x : f.v) s += x * x;
  return std::sqrt(s * g.dx1() * g.dx2());
}
double l2_norm(const StatePair& st, const Grid& g) {
  const double a = l2_norm(st.plus, g), b = l2_norm(st.minus, g);
  return std::sqrt(a * a + b * b);
}
double l2_norm(const Slab& u, const Grid& g) {
  double s = 0;
  for (const auto& f : u.t) {
    const double n = l2_norm(f, g);
    s += n * n;
  }
  return std::sqrt(s * u.dt);
}
double l2_norm(const SlabPair& u, const Grid& g) {
  double s = 0;
  for (const auto& f : u.t) {
    const double n = l2_norm(f, g);
    s += n * n;
  }
  return std::sqrt(s * u.dt);
}
double l2_norm(const SlabBdry& u, const Grid& g) {
  double s = 0;
  for (const auto& f : u.t) {
    const double n = l2_norm(f, g);
    s += n * n;
  }
  return std::sqrt(s * u.dt);
}
double l2_norm(const SlabRows& u, const Grid& g) {
  double s = 0;
  for (const auto& rows : u.t)
    for (const auto& r : rows) {
      const double n = l2_norm(r, g);
      s += n * n;
    }
  return std::sqrt(s * u.dt);
}

namespace {

// local vector arithmetic so the series stencil below works on BdryField
BdryField operator*(double s, const BdryField& v) {
  BdryField r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}
BdryField operator+(BdryField a, const BdryField& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
BdryField operator-(BdryField a, const BdryField& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// central 4th order with explicit zero padding on the left (vanishing past)
// and one-sided closures on the right end
template <class T, class Zero>
std::vector<T> dt_series(const std::vector<T>& u, double dt, bool vip, const Zero& zero) {
  const int m = static_cast<int>(u.size()) - 1;
  std::vector<T> r(u.size(), zero);
  const double c4 = 1.0 / (12.0 * dt), c2 = 1.0 / (2.0 * dt);
  auto get = [&](int k) -> T {
    if (k < 0) {
      if (vip) return zero;
      return u[0];
    }
    return u[static_cast<std::size_t>(k)];
  };
  for (int k = 0; k <= m; ++k) {
    if (k <= m - 2 && (vip || k >= 2)) {
      r[k] = c4 * (get(k - 2) - 8.0 * get(k - 1) + 8.0 * get(k + 1) - get(k + 2));
    } else if (k <= m - 1 && (vip || k >= 1)) {
      r[k] = c2 * (get(k + 1) - get(k - 1));
    } else if (k == m && m >= 2) {
      r[k] = c2 * (3.0 * u[k] - 4.0 * u[k - 1] + u[k - 2]);
    } else if (k == m && m == 1) {
      r[k] = (1.0 / dt) * (u[1] - u[0]);
    } else if (!vip) {
      r[k] = (1.0 / dt) * (get(k + 1) - get(k));
    }
  }
  return r;
}

template <class SlabT, class Zero>
SlabT dt_slab(const SlabT& u, bool vip, const Zero& zero) {
  SlabT r = u;
  r.t = dt_series(u.t, u.dt, vip, zero);
  return r;
}

}  // namespace

Slab slab_dt(const Slab& u, bool vip) {
  const Field z(u.t.front().np1, u.t.front().n2);
  return dt_slab(u, vip, z);
}
SlabPair slab_dt(const SlabPair& u, bool vip) {
  StatePair z = u.t.front();
  z *= 0.0;
  return dt_slab(u, vip, z);
}
SlabBdry slab_dt(const SlabBdry& u, bool vip) {
  const BdryField z(u.t.front().size(), 0.0);
  return dt_slab(u, vip, z);
}

namespace {

// x2-derivative of a boundary slab
SlabBdry sb_d2(const SlabBdry& u, const Grid& g) {
  SlabBdry r = u;
  for (auto& f : r.t) f = d2_bdry(f, g);
  return r;
}

template <class SlabT, class D1, class D2, class Dt, class Norm>
double hs_impl(const SlabT& u, int s, const D1& dd1, const D2& dd2, const Dt& ddt,
               const Norm& nrm) {
  double total = 0;
  // iterate over all (it, i1, i2) with sum <= s
  for (int it = 0; it <= s; ++it) {
    SlabT ut = u;
    for (int k = 0; k < it; ++k) ut = ddt(ut);
    for (int i1 = 0; i1 + it <= s; ++i1) {
      SlabT u1 = ut;
      for (int k = 0; k < i1; ++k) u1 = dd1(u1);
      for (int i2 = 0; i1 + i2 + it <= s; ++i2) {
        SlabT u2 = u1;
        for (int k = 0; k < i2; ++k) u2 = dd2(u2);
        const double n = nrm(u2);
        total += n * n;
      }
    }
  }
  return std::sqrt(total);
}

}  // namespace

double hs_norm(const Slab& u, const Grid& g, int s, bool vip) {
  auto dd1 = [&](const Slab& x) {
    Slab r = x;
    for (auto& f : r.t) f = d1(f, g);
    return r;
  };
  auto dd2 = [&](const Slab& x) {
    Slab r = x;
    for (auto& f : r.t) f = d2(f, g);
    return r;
  };
  auto ddt = [&](const Slab& x) { return slab_dt(x, vip); };
  auto nrm = [&](const Slab& x) { return l2_norm(x, g); };
  return hs_impl(u, s, dd1, dd2, ddt, nrm);
}

double hs_norm(const SlabPair& u, const Grid& g, int s, bool vip) {
  auto dd1 = [&](const SlabPair& x) {
    SlabPair r = x;
    for (auto& f : r.t) {
      f.plus = d1(f.plus, g);
      f.minus = d1(f.minus, g);
    }
    return r;
  };
  auto dd2 = [&](const SlabPair& x) {
    SlabPair r = x;
    for (auto& f : r.t) {
      f.plus = d2(f.plus, g);
      f.minus = d2(f.minus, g);
    }
    return r;
  };
  auto ddt = [&](const SlabPair& x) { return slab_dt(x, vip); };
  auto nrm = [&](const SlabPair& x) { return l2_norm(x, g); };
  return hs_impl(u, s, dd1, dd2, ddt, nrm);
}

double hs_norm(const SlabBdry& u, const Grid& g, int s, bool vip) {
  double total = 0;
  for (int it = 0; it <= s; ++it) {
    SlabBdry ut = u;
    for (int k = 0; k < it; ++k) ut = slab_dt(ut, vip);
    for (int i2 = 0; i2 + it <= s; ++i2) {
      SlabBdry u2 = ut;
      for (int k = 0; k < i2; ++k) u2 = sb_d2(u2, g);
      const double n = l2_norm(u2, g);
      total += n * n;
    }
  }
  return std::sqrt(total);
}

double hs_norm(const SlabRows& u, const Grid& g, int s, bool vip) {
  double total = 0;
  for (int r = 0; r < 5; ++r) {
    SlabBdry one;
    one.dt = u.dt;
    one.t.reserve(u.t.size());
    for (const auto& rows : u.t) one.t.push_back(rows[r]);
    const double n = hs_norm(one, g, s, vip);
    total += n * n;
  }
  return std::sqrt(total);
}

double hs_norm_spatial(const Field& f, const Grid& g, int s) {
  double total = 0;
  for (int i1 = 0; i1 <= s; ++i1) {
    Field u1 = f;
    for (int k = 0; k < i1; ++k) u1 = d1(u1, g);
    for (int i2 = 0; i1 + i2 <= s; ++i2) {
      Field u2 = u1;
      for (int k = 0; k < i2; ++k) u2 = d2(u2, g);
      const double n = l2_norm(u2, g);
      total += n * n;
    }
  }
  return std::sqrt(total);
}

double hs_norm_spatial(const StatePair& f, const Grid& g, int s) {
  double total = 0;
  for (Side sd : kSides)
    for (int k = 0; k < 6; ++k) {
      const double n = hs_norm_spatial(f.side(sd).c[k], g, s);
      total += n * n;
    }
  return std::sqrt(total);
}

double hs_norm_spatial(const BdryField& f, const Grid& g, int s) {
  double total = 0;
  BdryField u = f;
  for (int k = 0; k <= s; ++k) {
    const double n = l2_norm(u, g);
    total += n * n;
    if (k < s) u = d2_bdry(u, g);
  }
  return std::sqrt(total);
}

double w2inf_norm(const StatePair& f, const Grid& g) {
  double m = 0;
  for (Side sd : kSides)
    for (int k = 0; k < 6; ++k) {
      const Field& u = f.side(sd).c[k];
      const Field u1 = d1(u, g), u2 = d2(u, g);
      m = std::max({m, u.inf_norm(), u1.inf_norm(), u2.inf_norm(), d1(u1, g).inf_norm(),
                    d2(u1, g).inf_norm(), d2(u2, g).inf_norm()});
    }
  return m;
}

}  // namespace cmhd
