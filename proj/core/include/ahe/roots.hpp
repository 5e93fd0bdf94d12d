#ifndef AHE_ROOTS_HPP
#define AHE_ROOTS_HPP

#include <cmath>
#include <functional>

#include "ahe/errors.hpp"

namespace ahe {

// Brent's method on a sign-changing bracket.
inline double brent(const std::function<double(double)>& f, double a, double b,
                    double tol = 1e-15, int max_iter = 200) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw numerical_error("brent: bracket does not change sign");
  if (std::fabs(fa) < std::fabs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a, fc = fa, s = b, fs = fb, d = 0.0;
  bool mflag = true;
  for (int it = 0; it < max_iter; ++it) {
    if (fb == 0.0 || std::fabs(b - a) < tol * (1.0 + std::fabs(b))) return b;
    if (fa != fc && fb != fc) {
      s = a * fb * fc / ((fa - fb) * (fa - fc)) +
          b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);
    }
    double lo = (3.0 * a + b) / 4.0, hi = b;
    if (lo > hi) std::swap(lo, hi);
    bool bad = (s < lo || s > hi) ||
               (mflag && std::fabs(s - b) >= std::fabs(b - c) / 2.0) ||
               (!mflag && std::fabs(s - b) >= std::fabs(c - d) / 2.0);
    if (bad) {
      s = 0.5 * (a + b);
      mflag = true;
    } else {
      mflag = false;
    }
    fs = f(s);
    d = c;
    c = b;
    fc = fb;
    if (fa * fs < 0.0) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::fabs(fa) < std::fabs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  return b;
}

// Newton polish with bisection fallback inside a bracket.
inline double newton_in_bracket(const std::function<double(double)>& f,
                                const std::function<double(double)>& df, double a,
                                double b, double x0, double tol = 1e-15,
                                int max_iter = 100) {
  double x = x0;
  for (int it = 0; it < max_iter; ++it) {
    double fx = f(x);
    if (std::fabs(fx) == 0.0) return x;
    double dfx = df(x);
    double step = (dfx != 0.0) ? fx / dfx : 0.0;
    double xn = x - step;
    if (dfx == 0.0 || xn <= a || xn >= b) xn = 0.5 * (a + b);
    if (f(a) * fx < 0.0)
      b = x;
    else
      a = x;
    if (std::fabs(xn - x) < tol * (1.0 + std::fabs(xn))) return xn;
    x = xn;
  }
  return x;
}

}  // namespace ahe

#endif
