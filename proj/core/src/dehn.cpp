#include "ahe/dehn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "ahe/compactification.hpp"
#include "ahe/errors.hpp"
#include "ahe/families.hpp"
#include "ahe/roots.hpp"

namespace ahe {

using std::numbers::pi;

namespace {

long long gcd_ll(long long a, long long b) {
  return std::gcd(std::llabs(a), std::llabs(b));
}

void require_primitive(const SigmaClass& s) {
  if (s.p == 0 && s.q == 0) throw domain_error("sigma must be nonzero");
  if (gcd_ll(s.p, s.q) != 1) throw domain_error("sigma must be a primitive class");
}

// complementary generator tau with det[sigma tau] = p tau_q - q tau_p = 1
std::pair<long long, long long> complementary_class(const SigmaClass& s) {
  long long old_r = s.p, r = s.q;
  long long old_x = 1, x = 0;
  long long old_y = 0, y = 1;
  while (r != 0) {
    long long quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_x, x) = std::make_pair(x, old_x - quot * x);
    std::tie(old_y, y) = std::make_pair(y, old_y - quot * y);
  }
  long long sign = old_r > 0 ? 1 : -1;  // old_x p + old_y q = old_r = +-1
  long long tau_p = -old_y * sign, tau_q = old_x * sign;
  if (s.p * tau_q - s.q * tau_p != 1)
    throw numerical_error("complementary class construction failed");
  return {tau_p, tau_q};
}

double toral_beta1() {
  return 4.0 * pi / (3.0 * std::cbrt(2.0));  // beta of the m = 1 toral hole
}

}  // namespace

std::vector<std::pair<SigmaClass, double>> primitive_geodesics(
    const FlatTorus2& torus, double L_max) {
  if (!torus.gram.spd()) throw invalid_metric_error("torus Gram must be SPD");
  if (L_max <= 0.0) return {};
  double tr = torus.gram.a + torus.gram.c;
  double det = torus.gram.det();
  double lam_min = 0.5 * (tr - std::sqrt(tr * tr - 4.0 * det));
  long long bound = static_cast<long long>(std::ceil(L_max / std::sqrt(lam_min))) + 1;

  std::vector<std::pair<SigmaClass, double>> out;
  for (long long p = 0; p <= bound; ++p)
    for (long long q = -bound; q <= bound; ++q) {
      if (p == 0 && q <= 0) continue;  // canonical: p > 0, or p = 0 and q > 0
      if (gcd_ll(p, q) != 1) continue;
      double L2 = torus.gram.norm2(p, q);
      if (L2 <= L_max * L_max) out.push_back({{p, q}, std::sqrt(L2)});
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    if (a.first.p != b.first.p) return a.first.p < b.first.p;
    return a.first.q < b.first.q;
  });
  return out;
}

DehnFilling fill_3d(const FlatTorus2& torus, const SigmaClass& sigma) {
  require_primitive(sigma);
  DehnFilling f;
  f.dimension = 3;
  f.base_torus = torus;
  f.sigma = sigma;
  f.L = std::sqrt(torus.gram.norm2(sigma.p, sigma.q));
  f.R = std::asinh(f.L / (2.0 * pi));
  f.ortho_height = torus.area() / f.L;
  // the orthogonal translation rides along the core at warp ratio
  // cosh(0)/cosh(R); the rotation part fixes the core pointwise
  f.core_length = f.ortho_height / std::cosh(f.R);
  auto tau = complementary_class(sigma);
  double c_par = torus.gram.inner(tau.first, tau.second, sigma.p, sigma.q) / f.L;
  f.twist = 2.0 * pi * c_par / f.L;
  f.cusp_flag = f.core_length < 1e-2;
  return f;
}

DehnFilling fill_4d(const FlatTorus2& torus, const SigmaClass& sigma, double beta2) {
  require_primitive(sigma);
  if (beta2 <= 0.0) throw domain_error("beta2 must be positive");
  DehnFilling f;
  f.dimension = 4;
  f.base_torus = torus;
  f.sigma = sigma;
  f.mass = 1.0;
  f.beta2 = beta2;
  f.L = std::sqrt(torus.gram.norm2(sigma.p, sigma.q));
  const double beta = toral_beta1();
  const double rp = std::cbrt(2.0);
  // V(R) = (L/beta)^2 with V = R^2 - 2/R, i.e. R^3 - (L/beta)^2 R - 2 = 0
  const double target = (f.L / beta) * (f.L / beta);
  auto g = [&](double R) { return R * R - 2.0 / R - target; };
  double hi = std::max(2.0 * rp, 2.0 * std::sqrt(target));
  while (g(hi) <= 0.0) hi *= 2.0;
  f.R = brent(g, rp, hi, 1e-15);
  f.ortho_height = torus.area() / f.L;
  // s1-translation h/R on the boundary cylinder rides to the horizon at
  // warp ratio r+/R
  f.core_length = rp * f.ortho_height / f.R;
  auto tau = complementary_class(sigma);
  double c_par = torus.gram.inner(tau.first, tau.second, sigma.p, sigma.q) / f.L;
  f.twist = 2.0 * pi * c_par / f.L;
  f.cusp_flag = f.core_length < 1e-2;
  return f;
}

double cusp_limit_distance(const DehnFilling& filling,
                           std::pair<double, double> t_window) {
  double a = t_window.first, b = t_window.second;
  if (!(a >= 0.0) || !(b > a)) throw domain_error("invalid t window");

  if (filling.dimension == 3) {
    // complete H^3 tube: t sinh = (C/2)(1 - (t/C)^2), t cosh = (C/2)(1 + (t/C)^2),
    // boundary meridian length pi C = L
    double C = filling.L / pi;
    double top = std::min(b, 0.999 * C);
    if (top <= a) throw domain_error("window outside the collar of the filling");
    double x = (top / C) * (top / C);
    double g_th = (1.0 - x) * (1.0 - x), g_s = (1.0 + x) * (1.0 + x);
    return std::max(std::fabs(g_th - 1.0), std::fabs(g_s - 1.0));
  }

  // 4d: toral black hole m = 1 with the meridian circle of length L at the
  // boundary, i.e. normalization scale L/beta
  FamilyMetric fam = toral_black_hole(1.0);
  double lambda = filling.L / toral_beta1();
  GeodesicCompactification comp(fam, fam.boundary, 1.0);
  double top = std::min(b, 0.999 * lambda * comp.width());
  if (top <= a) throw domain_error("window outside the collar of the filling");
  double worst = 0.0;
  for (int k = 0; k <= 32; ++k) {
    double t = a + (top - a) * k / 32.0;
    if (t <= 0.0) continue;
    auto comps = comp.gt_block_components(t / lambda);
    for (double G : comps) worst = std::max(worst, std::fabs(G - 1.0));
  }
  return worst;
}

Gram2 sigma_tau_gram(const FlatTorus2& torus, const SigmaClass& sigma) {
  require_primitive(sigma);
  auto tau = complementary_class(sigma);
  Gram2 g;
  g.a = torus.gram.norm2(sigma.p, sigma.q);
  g.b = torus.gram.inner(sigma.p, sigma.q, tau.first, tau.second);
  g.c = torus.gram.norm2(tau.first, tau.second);
  return g;
}

Gram2 boundary_gram_from_filling(const DehnFilling& filling) {
  // lattice basis in the flat boundary: u1 = (L, 0) (the meridian image),
  // u2 = (c_par, h) (the Z-generator)
  double c_par = filling.twist * filling.L / (2.0 * pi);
  Gram2 g;
  g.a = filling.L * filling.L;
  g.b = filling.L * c_par;
  g.c = c_par * c_par + filling.ortho_height * filling.ortho_height;
  return g;
}

}  // namespace ahe
