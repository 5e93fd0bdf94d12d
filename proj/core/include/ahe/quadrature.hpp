#ifndef AHE_QUADRATURE_HPP
#define AHE_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <limits>

#include "ahe/errors.hpp"

namespace ahe {

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.  The K15 value is
// returned; |K15 - G7| drives the subdivision.  Recursion depth is capped so
// an integrable endpoint singularity fails loudly instead of spinning.
namespace gk {

// Nodes/weights for the 15-point Kronrod rule with embedded 7-point Gauss.
inline constexpr double xk[8] = {
    0.0,
    0.2077849550078984676006894037732449,
    0.4058451513773971669066064120769615,
    0.5860872354676911302941448382587296,
    0.7415311855993944398638647732807884,
    0.8648644233597690727897127886409262,
    0.9491079123427585245261896840478513,
    0.9914553711208126392068546975263285};
inline constexpr double wk[8] = {
    0.2094821410847278280129991748917143,
    0.2044329400752988924141619992346491,
    0.1903505780647854099132564024210137,
    0.1690047266392679028265834265985503,
    0.1406532597155259187451895905102379,
    0.1047900103222501838398763225415180,
    0.0630920926299785532907006631892042,
    0.0229353220105292249637320080589695};
inline constexpr double wg[4] = {
    0.4179591836734693877551020408163265,
    0.3818300505051189449503697754889751,
    0.2797053914892766679014677714237796,
    0.1294849661688696932706114326790820};

inline void rule(const std::function<double(double)>& f, double a, double b,
                 double& k15, double& g7) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fk = f(c);
  k15 = wk[0] * fk;
  g7 = wg[0] * fk;
  for (int i = 1; i < 8; ++i) {
    const double dx = h * xk[i];
    const double fs = f(c - dx) + f(c + dx);
    k15 += wk[i] * fs;
    if (i % 2 == 0) g7 += wg[i / 2] * fs;
  }
  k15 *= h;
  g7 *= h;
}

inline double adapt(const std::function<double(double)>& f, double a, double b,
                    double abstol, int depth) {
  double k15, g7;
  rule(f, a, b, k15, g7);
  double err = std::fabs(k15 - g7);
  // accept when inside tolerance, at the roundoff floor of the rule itself,
  // or when the panel can no longer be split in double precision
  if (err <= abstol || err <= 4e-16 * std::fabs(k15) ||
      (b - a) < 1e-14 * (std::fabs(a) + std::fabs(b)))
    return k15;
  if (depth <= 0) throw numerical_error("adaptive quadrature: depth exhausted");
  double m = 0.5 * (a + b);
  return adapt(f, a, m, 0.5 * abstol, depth - 1) +
         adapt(f, m, b, 0.5 * abstol, depth - 1);
}

}  // namespace gk

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13, int max_depth = 48) {
  if (!(b >= a)) throw domain_error("integrate: b < a");
  if (a == b) return 0.0;
  // scale the acceptance threshold by a first-pass magnitude estimate so tol
  // acts relatively on large integrals and absolutely on small ones
  double k15, g7;
  gk::rule(f, a, b, k15, g7);
  double abstol = tol * std::max(1.0, std::fabs(k15));
  return gk::adapt(f, a, b, abstol, max_depth);
}

// integral over [a, inf) of a function decaying at least like s^{-2}:
// substitute s = a + x/(1-x), x in [0,1).
inline double integrate_to_infinity(const std::function<double(double)>& f, double a,
                                    double abstol = 1e-13) {
  auto g = [&](double x) {
    double om = 1.0 - x;
    double s = a + x / om;
    double jac = 1.0 / (om * om);
    return f(s) * jac;
  };
  return gk::adapt(g, 0.0, 1.0 - 1e-12, abstol, 48);
}

}  // namespace ahe

#endif
