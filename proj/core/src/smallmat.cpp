#include "cmhd/smallmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmhd {

namespace {

constexpr int N = 6;

double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

// Householder reduction to tridiagonal form (tred2-style).
void tridiagonalize(std::array<std::array<double, N>, N>& z, std::array<double, N>& d,
                    std::array<double, N>& e) {
  for (int i = N - 1; i > 0; i--) {
    int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; k++) scale += std::abs(z[i][k]);
      if (scale == 0.0) {
        e[i] = z[i][l];
      } else {
        for (int k = 0; k <= l; k++) {
          z[i][k] /= scale;
          h += z[i][k] * z[i][k];
        }
        double f = z[i][l];
        double g = (f >= 0.0 ? -std::sqrt(h) : std::sqrt(h));
        e[i] = scale * g;
        h -= f * g;
        z[i][l] = f - g;
        f = 0.0;
        for (int j = 0; j <= l; j++) {
          z[j][i] = z[i][j] / h;
          g = 0.0;
          for (int k = 0; k <= j; k++) g += z[j][k] * z[i][k];
          for (int k = j + 1; k <= l; k++) g += z[k][j] * z[i][k];
          e[j] = g / h;
          f += e[j] * z[i][j];
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; j++) {
          f = z[i][j];
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; k++) z[j][k] -= (f * e[k] + g * z[i][k]);
        }
      }
    } else {
      e[i] = z[i][l];
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < N; i++) {
    int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; j++) {
        double g = 0.0;
        for (int k = 0; k <= l; k++) g += z[i][k] * z[k][j];
        for (int k = 0; k <= l; k++) z[k][j] -= g * z[k][i];
      }
    }
    d[i] = z[i][i];
    z[i][i] = 1.0;
    for (int j = 0; j <= l; j++) z[j][i] = z[i][j] = 0.0;
  }
}

// QL with implicit shifts on the tridiagonal (tql2-style).
void ql_implicit(std::array<std::array<double, N>, N>& z, std::array<double, N>& d,
                 std::array<double, N>& e) {
  for (int i = 1; i < N; i++) e[i - 1] = e[i];
  e[N - 1] = 0.0;
  for (int l = 0; l < N; l++) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < N - 1; m++) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 1e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 50) throw std::runtime_error("sym_eigen6: too many QL iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; i--) {
          double f = s * e[i];
          double b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < N; k++) {
            f = z[k][i + 1];
            z[k][i + 1] = s * z[k][i] + c * f;
            z[k][i] = c * z[k][i] - s * f;
          }
        }
        if (r == 0.0 && m - 1 >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

void sym_eigen6(const Mat6& A, std::array<double, 6>& evals, Mat6* evecs) {
  std::array<std::array<double, N>, N> z;
  for (int i = 0; i < N; i++)
    for (int j = 0; j < N; j++) z[i][j] = 0.5 * (A(i, j) + A(j, i));
  std::array<double, N> d{}, e{};
  tridiagonalize(z, d, e);
  ql_implicit(z, d, e);

  // sort ascending, carry vectors along
  std::array<int, N> order;
  for (int i = 0; i < N; i++) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  for (int i = 0; i < N; i++) evals[i] = d[order[i]];
  if (evecs) {
    for (int i = 0; i < N; i++)
      for (int j = 0; j < N; j++) (*evecs)(i, j) = z[i][order[j]];
  }
}

EigenSignature eigen_signature(const std::array<double, 6>& evals, double tol) {
  EigenSignature s;
  for (double l : evals) {
    if (std::abs(l) < tol)
      s.n_zero++;
    else if (l > 0)
      s.n_plus++;
    else
      s.n_minus++;
  }
  return s;
}

bool solve_dense(int n, double* a, double* b) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a[col * n + col]);
    for (int r = col + 1; r < n; ++r) {
      double v = std::abs(a[r * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-300) return false;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      std::swap(b[piv], b[col]);
    }
    const double inv = 1.0 / a[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] * inv;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * b[c];
    b[r] = s / a[r * n + r];
  }
  return true;
}

bool cholesky6(const Mat6& A, Mat6& L) {
  L = Mat6{};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = A(i, j);
      for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      if (i == j) {
        if (s <= 0.0) return false;
        L(i, i) = std::sqrt(s);
      } else {
        L(i, j) = s / L(j, j);
      }
    }
  }
  return true;
}

Vec6 cholesky_solve6(const Mat6& L, const Vec6& b) {
  Vec6 y;
  for (int i = 0; i < 6; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= L(i, k) * y[k];
    y[i] = s / L(i, i);
  }
  Vec6 x;
  for (int i = 5; i >= 0; --i) {
    double s = y[i];
    for (int k = i + 1; k < 6; ++k) s -= L(k, i) * x[k];
    x[i] = s / L(i, i);
  }
  return x;
}

}  // namespace cmhd
