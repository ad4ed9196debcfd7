#include "cmhd/grid.hpp"

#include <cmath>

namespace cmhd {

double Field::inf_norm() const {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double State::inf_norm() const {
  double m = 0;
  for (const auto& f : c) m = std::max(m, f.inf_norm());
  return m;
}

BdryField bdry_zero(const Grid& g) { return BdryField(static_cast<std::size_t>(g.n2), 0.0); }

Field d1(const Field& f, const Grid& g) {
  Field r(f.np1, f.n2);
  const int n = f.np1;
  const double h = g.dx1();
  const double c4 = 1.0 / (12.0 * h), c2 = 1.0 / (2.0 * h);
  for (int j = 0; j < f.n2; ++j) {
    // one-sided 2nd order at the ends
    r.at(0, j) = (-3.0 * f.at(0, j) + 4.0 * f.at(1, j) - f.at(2, j)) * c2;
    r.at(n - 1, j) = (3.0 * f.at(n - 1, j) - 4.0 * f.at(n - 2, j) + f.at(n - 3, j)) * c2;
    if (n >= 4) {
      r.at(1, j) = (f.at(2, j) - f.at(0, j)) * c2;
      r.at(n - 2, j) = (f.at(n - 1, j) - f.at(n - 3, j)) * c2;
    }
    for (int i = 2; i < n - 2; ++i) {
      r.at(i, j) =
          (f.at(i - 2, j) - 8.0 * f.at(i - 1, j) + 8.0 * f.at(i + 1, j) - f.at(i + 2, j)) * c4;
    }
  }
  return r;
}

Field d2(const Field& f, const Grid& g) {
  Field r(f.np1, f.n2);
  const int n2 = f.n2;
  const double c4 = 1.0 / (12.0 * g.dx2());
  for (int i = 0; i < f.np1; ++i) {
    for (int j = 0; j < n2; ++j) {
      const int jm2 = (j - 2 + n2) % n2, jm1 = (j - 1 + n2) % n2;
      const int jp1 = (j + 1) % n2, jp2 = (j + 2) % n2;
      r.at(i, j) =
          (f.at(i, jm2) - 8.0 * f.at(i, jm1) + 8.0 * f.at(i, jp1) - f.at(i, jp2)) * c4;
    }
  }
  return r;
}

BdryField d2_bdry(const BdryField& f, const Grid& g) {
  const int n2 = static_cast<int>(f.size());
  BdryField r(f.size(), 0.0);
  const double c4 = 1.0 / (12.0 * g.dx2());
  for (int j = 0; j < n2; ++j) {
    const int jm2 = (j - 2 + n2) % n2, jm1 = (j - 1 + n2) % n2;
    const int jp1 = (j + 1) % n2, jp2 = (j + 2) % n2;
    r[j] = (f[jm2] - 8.0 * f[jm1] + 8.0 * f[jp1] - f[jp2]) * c4;
  }
  return r;
}

BdryField trace0(const Field& f) {
  BdryField r(static_cast<std::size_t>(f.n2));
  for (int j = 0; j < f.n2; ++j) r[j] = f.at(0, j);
  return r;
}

BdryField d1_trace0(const Field& f, const Grid& g) {
  BdryField r(static_cast<std::size_t>(f.n2));
  const double c2 = 1.0 / (2.0 * g.dx1());
  for (int j = 0; j < f.n2; ++j)
    r[j] = (-3.0 * f.at(0, j) + 4.0 * f.at(1, j) - f.at(2, j)) * c2;
  return r;
}

State d1(const State& s, const Grid& g) {
  State r;
  for (int k = 0; k < 6; ++k) r.c[k] = d1(s.c[k], g);
  return r;
}

State d2(const State& s, const Grid& g) {
  State r;
  for (int k = 0; k < 6; ++k) r.c[k] = d2(s.c[k], g);
  return r;
}

}  // namespace cmhd
