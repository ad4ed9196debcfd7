#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace cmhd {

/// Fixed-size 6-vector matching the unknown ordering (p, v1, v2, H1, H2, S).
struct Vec6 {
  std::array<double, 6> a{};

  double& operator[](int i) { return a[static_cast<size_t>(i)]; }
  double operator[](int i) const { return a[static_cast<size_t>(i)]; }

  Vec6& operator+=(const Vec6& o) {
    for (int i = 0; i < 6; ++i) a[i] += o.a[i];
    return *this;
  }
  Vec6& operator-=(const Vec6& o) {
    for (int i = 0; i < 6; ++i) a[i] -= o.a[i];
    return *this;
  }
  Vec6& operator*=(double s) {
    for (double& x : a) x *= s;
    return *this;
  }
  friend Vec6 operator+(Vec6 x, const Vec6& y) { return x += y; }
  friend Vec6 operator-(Vec6 x, const Vec6& y) { return x -= y; }
  friend Vec6 operator*(double s, Vec6 x) { return x *= s; }

  double inf_norm() const {
    double m = 0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
  }
};

/// Dense 6x6 matrix, row major.
struct Mat6 {
  std::array<double, 36> m{};

  double& operator()(int r, int c) { return m[static_cast<size_t>(r * 6 + c)]; }
  double operator()(int r, int c) const { return m[static_cast<size_t>(r * 6 + c)]; }

  static Mat6 identity() {
    Mat6 I;
    for (int i = 0; i < 6; ++i) I(i, i) = 1.0;
    return I;
  }
  static Mat6 diag(const Vec6& d) {
    Mat6 D;
    for (int i = 0; i < 6; ++i) D(i, i) = d[i];
    return D;
  }

  Mat6& operator+=(const Mat6& o) {
    for (size_t i = 0; i < 36; ++i) m[i] += o.m[i];
    return *this;
  }
  Mat6& operator-=(const Mat6& o) {
    for (size_t i = 0; i < 36; ++i) m[i] -= o.m[i];
    return *this;
  }
  Mat6& operator*=(double s) {
    for (double& x : m) x *= s;
    return *this;
  }
  friend Mat6 operator+(Mat6 x, const Mat6& y) { return x += y; }
  friend Mat6 operator-(Mat6 x, const Mat6& y) { return x -= y; }
  friend Mat6 operator*(double s, Mat6 x) { return x *= s; }

  Vec6 operator*(const Vec6& v) const {
    Vec6 r;
    for (int i = 0; i < 6; ++i) {
      double s = 0;
      for (int j = 0; j < 6; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }
  Mat6 operator*(const Mat6& o) const {
    Mat6 r;
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < 6; ++k) {
        const double x = (*this)(i, k);
        if (x == 0.0) continue;
        for (int j = 0; j < 6; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }
  Mat6 transposed() const {
    Mat6 r;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  double inf_norm() const {
    double mx = 0;
    for (int i = 0; i < 6; ++i) {
      double s = 0;
      for (int j = 0; j < 6; ++j) s += std::abs((*this)(i, j));
      mx = std::max(mx, s);
    }
    return mx;
  }
  double asym_inf_norm() const {
    double mx = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) mx = std::max(mx, std::abs((*this)(i, j) - (*this)(j, i)));
    return mx;
  }
};

/// Eigenvalues (and optionally eigenvectors as columns) of a symmetric 6x6
/// matrix via Householder tridiagonalization followed by implicit QL.
/// Eigenvalues come out ascending.
void sym_eigen6(const Mat6& A, std::array<double, 6>& evals, Mat6* evecs = nullptr);

/// Counts (n_plus, n_minus, n_zero) of the eigenvalues of a symmetric matrix,
/// zero meaning |lambda| < tol.
struct EigenSignature {
  int n_plus = 0, n_minus = 0, n_zero = 0;
  bool operator==(const EigenSignature&) const = default;
};
EigenSignature eigen_signature(const std::array<double, 6>& evals, double tol);

/// Solves a small dense system in place with partial pivoting. Returns false
/// if the pivot falls below 1e-300. a is n x n row major, b is the rhs and
/// receives the solution.
bool solve_dense(int n, double* a, double* b);

/// Cholesky factor L (lower) of an SPD 6x6 matrix; returns false if a pivot
/// is not positive.
bool cholesky6(const Mat6& A, Mat6& L);

/// Solves L y = b and then L^T x = y.
Vec6 cholesky_solve6(const Mat6& L, const Vec6& b);

}  // namespace cmhd
