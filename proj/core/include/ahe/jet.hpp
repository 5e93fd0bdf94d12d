#ifndef AHE_JET_HPP
#define AHE_JET_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

#include "ahe/errors.hpp"

namespace ahe {

// Truncated Taylor jet of a scalar function of one variable: value and the
// first ORDER derivatives at a point.  d[k] holds the k-th derivative (not
// the Taylor coefficient; the k! is kept explicit in the products).
//
// All the radial profiles in the toolkit (warp factors, defining functions,
// V(r), t(r)) are carried as jets so that curvature, which needs up to
// fourth derivatives, is exact to roundoff rather than finite-differenced.
inline constexpr int kJetOrder = 6;

struct Jet {
  std::array<double, kJetOrder + 1> d{};  // d[0] = value, d[k] = k-th derivative

  Jet() = default;
  explicit Jet(double value) { d[0] = value; }

  static Jet constant(double c) { return Jet(c); }
  static Jet variable(double x) {
    Jet j(x);
    j.d[1] = 1.0;
    return j;
  }

  double value() const { return d[0]; }
  double deriv(int k) const { return d[static_cast<std::size_t>(k)]; }
};

namespace detail {
inline constexpr std::array<std::array<double, kJetOrder + 1>, kJetOrder + 1> binomials() {
  std::array<std::array<double, kJetOrder + 1>, kJetOrder + 1> c{};
  for (int n = 0; n <= kJetOrder; ++n) {
    c[n][0] = 1.0;
    for (int k = 1; k <= n; ++k)
      c[n][k] = c[n - 1][k - 1] + ((k <= n - 1) ? c[n - 1][k] : 0.0);
  }
  return c;
}
inline constexpr auto kBinom = binomials();
}  // namespace detail

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= kJetOrder; ++k) r.d[k] = a.d[k] + b.d[k];
  return r;
}
inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= kJetOrder; ++k) r.d[k] = a.d[k] - b.d[k];
  return r;
}
inline Jet operator-(const Jet& a) {
  Jet r;
  for (int k = 0; k <= kJetOrder; ++k) r.d[k] = -a.d[k];
  return r;
}
inline Jet operator+(const Jet& a, double c) {
  Jet r = a;
  r.d[0] += c;
  return r;
}
inline Jet operator+(double c, const Jet& a) { return a + c; }
inline Jet operator-(const Jet& a, double c) { return a + (-c); }
inline Jet operator-(double c, const Jet& a) { return (-a) + c; }

// Leibniz product on derivatives.
inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k <= kJetOrder; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += detail::kBinom[k][j] * a.d[j] * b.d[k - j];
    r.d[k] = s;
  }
  return r;
}
inline Jet operator*(const Jet& a, double c) {
  Jet r;
  for (int k = 0; k <= kJetOrder; ++k) r.d[k] = a.d[k] * c;
  return r;
}
inline Jet operator*(double c, const Jet& a) { return a * c; }

// Division by back-substitution in the Leibniz rule.
inline Jet operator/(const Jet& a, const Jet& b) {
  if (b.d[0] == 0.0) throw numerical_error("jet division by zero value");
  Jet r;
  for (int k = 0; k <= kJetOrder; ++k) {
    double s = a.d[k];
    for (int j = 0; j < k; ++j) s -= detail::kBinom[k][j] * r.d[j] * b.d[k - j];
    r.d[k] = s / b.d[0];
  }
  return r;
}
inline Jet operator/(double c, const Jet& b) { return Jet::constant(c) / b; }
inline Jet operator/(const Jet& a, double c) { return a * (1.0 / c); }

// Composition with a smooth scalar map given by its derivative sequence at a.value().
// f.d[k] = g^(k)(a0); returns jet of g(a(x)) via Faa di Bruno in incremental form.
inline Jet compose(const std::array<double, kJetOrder + 1>& g_derivs, const Jet& a) {
  // Represent the inner increment h = a - a0 (h.d[0] = 0) and evaluate the
  // Taylor polynomial of g with jet arithmetic.
  Jet h = a;
  h.d[0] = 0.0;
  Jet result = Jet::constant(g_derivs[0]);
  Jet hpow = Jet::constant(1.0);
  double fact = 1.0;
  for (int k = 1; k <= kJetOrder; ++k) {
    hpow = hpow * h;
    fact *= k;
    result = result + hpow * (g_derivs[k] / fact);
  }
  return result;
}

inline Jet sqrt(const Jet& a) {
  if (a.d[0] <= 0.0) throw numerical_error("jet sqrt of non-positive value");
  std::array<double, kJetOrder + 1> g{};
  double v = std::sqrt(a.d[0]);
  g[0] = v;
  // g^(k) = (1/2)(1/2-1)...(1/2-k+1) x^{1/2-k}
  double coef = 1.0, xpow = v;
  for (int k = 1; k <= kJetOrder; ++k) {
    coef *= (0.5 - (k - 1));
    xpow /= a.d[0];
    g[k] = coef * xpow;
  }
  return compose(g, a);
}

inline Jet exp(const Jet& a) {
  std::array<double, kJetOrder + 1> g{};
  double v = std::exp(a.d[0]);
  for (int k = 0; k <= kJetOrder; ++k) g[k] = v;
  return compose(g, a);
}

inline Jet log(const Jet& a) {
  if (a.d[0] <= 0.0) throw numerical_error("jet log of non-positive value");
  std::array<double, kJetOrder + 1> g{};
  g[0] = std::log(a.d[0]);
  double xpow = 1.0 / a.d[0];
  double coef = 1.0;
  for (int k = 1; k <= kJetOrder; ++k) {
    g[k] = coef * xpow;
    coef *= -k;
    xpow /= a.d[0];
  }
  return compose(g, a);
}

inline Jet sinh(const Jet& a) {
  std::array<double, kJetOrder + 1> g{};
  double s = std::sinh(a.d[0]), c = std::cosh(a.d[0]);
  for (int k = 0; k <= kJetOrder; ++k) g[k] = (k % 2 == 0) ? s : c;
  return compose(g, a);
}

inline Jet cosh(const Jet& a) {
  std::array<double, kJetOrder + 1> g{};
  double s = std::sinh(a.d[0]), c = std::cosh(a.d[0]);
  for (int k = 0; k <= kJetOrder; ++k) g[k] = (k % 2 == 0) ? c : s;
  return compose(g, a);
}

inline Jet pow_int(const Jet& a, int n) {
  if (n == 0) return Jet::constant(1.0);
  bool inv = n < 0;
  int p = inv ? -n : n;
  Jet r = Jet::constant(1.0);
  Jet base = a;
  while (p > 0) {
    if (p & 1) r = r * base;
    base = base * base;
    p >>= 1;
  }
  return inv ? (Jet::constant(1.0) / r) : r;
}

// A scalar profile of the radial coordinate, evaluated as a jet.
using RadialFn = std::function<Jet(double)>;

}  // namespace ahe

#endif
