#ifndef AHE_LINALG_HPP
#define AHE_LINALG_HPP

#include <array>
#include <cmath>
#include <vector>

#include "ahe/errors.hpp"

namespace ahe {

// 3x3 symmetric matrices in a fixed orthonormal boundary frame.
struct Sym3 {
  std::array<std::array<double, 3>, 3> m{};

  static Sym3 zero() { return {}; }
  static Sym3 identity() {
    Sym3 s;
    for (int i = 0; i < 3; ++i) s.m[i][i] = 1.0;
    return s;
  }
  static Sym3 diag(double a, double b, double c) {
    Sym3 s;
    s.m[0][0] = a;
    s.m[1][1] = b;
    s.m[2][2] = c;
    return s;
  }

  double operator()(int i, int j) const { return m[i][j]; }
  double& operator()(int i, int j) { return m[i][j]; }

  double trace() const { return m[0][0] + m[1][1] + m[2][2]; }
  double frobenius() const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += m[i][j] * m[i][j];
    return std::sqrt(s);
  }
  double max_abs() const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s = std::max(s, std::fabs(m[i][j]));
    return s;
  }

  friend Sym3 operator+(const Sym3& a, const Sym3& b) {
    Sym3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
  }
  friend Sym3 operator-(const Sym3& a, const Sym3& b) {
    Sym3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
    return r;
  }
  friend Sym3 operator*(const Sym3& a, double s) {
    Sym3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] * s;
    return r;
  }
  friend Sym3 operator*(double s, const Sym3& a) { return a * s; }
};

// Frame inner product <A,B> = sum A_ij B_ij.
inline double frame_inner(const Sym3& a, const Sym3& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a.m[i][j] * b.m[i][j];
  return s;
}

// 2x2 SPD Gram matrix utilities for flat-torus lattices.
struct Gram2 {
  double a = 1.0, b = 0.0, c = 1.0;  // [[a, b], [b, c]]

  double det() const { return a * c - b * b; }
  bool spd() const { return a > 0.0 && det() > 0.0; }
  // |p v1 + q v2|^2
  double norm2(long long p, long long q) const {
    return a * p * p + 2.0 * b * p * q + c * q * q;
  }
  double inner(long long p1, long long q1, long long p2, long long q2) const {
    return a * p1 * p2 + b * (p1 * q2 + q1 * p2) + c * q1 * q2;
  }
};

struct Gram3 {
  std::array<std::array<double, 3>, 3> g{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  static Gram3 diag(double a, double b, double c) {
    Gram3 r;
    r.g = {{{a, 0, 0}, {0, b, 0}, {0, 0, c}}};
    return r;
  }
  double det() const {
    const auto& m = g;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  bool spd() const {
    return g[0][0] > 0.0 && (g[0][0] * g[1][1] - g[0][1] * g[1][0]) > 0.0 &&
           det() > 0.0;
  }
};

// Least squares min ||A x - b|| by Householder QR in long double with column
// scaling; the geometric-grid Vandermonde fits need the QR conditioning.
inline std::vector<double> least_squares(const std::vector<std::vector<double>>& A,
                                         const std::vector<double>& b) {
  const std::size_t m = A.size();
  if (m == 0) throw domain_error("least_squares: empty system");
  const std::size_t n = A[0].size();
  if (m < n) throw domain_error("least_squares: underdetermined system");
  std::vector<long double> scale(n, 0.0L);
  for (std::size_t j = 0; j < n; ++j) {
    long double s = 0.0L;
    for (std::size_t i = 0; i < m; ++i)
      s = std::max(s, (long double)std::fabs(A[i][j]));
    scale[j] = (s > 0.0L) ? s : 1.0L;
  }
  std::vector<std::vector<long double>> R(m, std::vector<long double>(n));
  std::vector<long double> y(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) R[i][j] = A[i][j] / scale[j];
    y[i] = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    long double norm = 0.0L;
    for (std::size_t i = k; i < m; ++i) norm += R[i][k] * R[i][k];
    norm = std::sqrt((double)norm) * (R[k][k] >= 0 ? 1.0L : -1.0L);
    if (norm == 0.0L) throw numerical_error("least_squares: rank-deficient system");
    std::vector<long double> v(m, 0.0L);
    for (std::size_t i = k; i < m; ++i) v[i] = R[i][k];
    v[k] += norm;
    long double vtv = 0.0L;
    for (std::size_t i = k; i < m; ++i) vtv += v[i] * v[i];
    for (std::size_t j = k; j < n; ++j) {
      long double dot = 0.0L;
      for (std::size_t i = k; i < m; ++i) dot += v[i] * R[i][j];
      long double f = 2.0L * dot / vtv;
      for (std::size_t i = k; i < m; ++i) R[i][j] -= f * v[i];
    }
    long double dot = 0.0L;
    for (std::size_t i = k; i < m; ++i) dot += v[i] * y[i];
    long double f = 2.0L * dot / vtv;
    for (std::size_t i = k; i < m; ++i) y[i] -= f * v[i];
  }
  std::vector<double> x(n);
  for (std::size_t j = n; j-- > 0;) {
    long double s = y[j];
    for (std::size_t k = j + 1; k < n; ++k) s -= R[j][k] * (x[k] * scale[k]);
    x[j] = static_cast<double>(s / R[j][j] / scale[j]);
  }
  return x;
}

}  // namespace ahe

#endif
