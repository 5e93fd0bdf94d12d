#include "ahe/families.hpp"

#include <cmath>
#include <numbers>

#include "ahe/errors.hpp"
#include "ahe/roots.hpp"

namespace ahe {

namespace {

constexpr double kMassFloorC(int /*n*/) { return -0.19245008972987525; }  // -3^(-3/2)

Jet V_jet(int n, double c, double m, double r) {
  Jet rj = Jet::variable(r);
  return c + rj * rj - 2.0 * m * pow_int(rj, -(n - 3));
}

RadialFn make_inv_sqrtV(int n, double c, double m) {
  return [n, c, m](double r) { return 1.0 / sqrt(V_jet(n, c, m, r)); };
}
RadialFn make_sqrtV(int n, double c, double m) {
  return [n, c, m](double r) { return sqrt(V_jet(n, c, m, r)); };
}
RadialFn identity_warp() {
  return [](double r) { return Jet::variable(r); };
}

}  // namespace

void check_admissible(int n, double c, double m) {
  if (n < 4) throw domain_error("black-hole family needs n >= 4");
  if (c >= 0.0) {
    if (m <= 0.0)
      throw domain_error("mass must be positive for c >= 0 (singular at r = 0 otherwise)");
  } else {
    if (n != 4) throw domain_error("c = -1 admissibility implemented for n = 4");
    if (m <= kMassFloorC(n))
      throw domain_error("mass must exceed m_o = -3^(-3/2) for c = -1");
  }
}

double solve_r_plus(int n, double c, double m) {
  check_admissible(n, c, m);
  auto V = [&](double r) { return c + r * r - 2.0 * m / std::pow(r, n - 3); };
  // V is monotone increasing past its last stationary point; bracket from a
  // radius guaranteed past the largest root, downward.
  double hi = 2.0 * std::max(1.0, std::pow(2.0 * std::fabs(m) + 2.0, 1.0 / (n - 3)));
  while (V(hi) <= 0.0) hi *= 2.0;
  double lo;
  if (c < 0.0 && m < 0.0) {
    // V > 0 near r = 0; V at the dip bottom r* = (-m)^(1/3) is negative for
    // admissible m, giving a sign change on [r*, hi].
    lo = std::cbrt(-m);
    if (V(lo) >= 0.0)
      throw domain_error("no horizon: V has no root (mass at or below m_o)");
  } else {
    lo = 1e-9;
    while (V(lo) >= 0.0) lo *= 0.5;
  }
  double rp = brent(V, lo, hi, 1e-15);
  // polish with Newton on the exact derivative
  auto dV = [&](double r) {
    return 2.0 * r + 2.0 * (n - 3) * m / std::pow(r, n - 2);
  };
  for (int it = 0; it < 4; ++it) rp -= V(rp) / dV(rp);
  if (std::fabs(dV(rp)) < 1e-8)
    throw numerical_error("degenerate (double) horizon root");
  // land on the first double at or above the root so V >= 0 on [r+, inf)
  while (V(rp) < 0.0) rp = std::nextafter(rp, std::numeric_limits<double>::infinity());
  return rp;
}

double beta_smooth(int n, double /*c*/, double m, double r_plus) {
  double dV = 2.0 * r_plus + 2.0 * (n - 3) * m / std::pow(r_plus, n - 2);
  if (dV <= 0.0) throw numerical_error("nonpositive V'(r+), no smooth closure");
  return 4.0 * std::numbers::pi / dV;
}

FamilyMetric hyperbolic_ball() {
  FamilyMetric f;
  f.metric.x_min = 0.0;
  f.metric.x_max = std::numeric_limits<double>::infinity();
  f.metric.radial_factor = make_inv_sqrtV(4, 1.0, 0.0);
  f.metric.warp_factors = {identity_warp()};
  f.metric.fiber.blocks = {FiberBlock::sphere(3)};
  f.metric.dimension = 4;
  f.metric.name = "hyperbolic_ball";
  f.boundary = BoundaryMetric3::round_sphere(1.0);
  f.horizon = 0.0;
  f.mass = 0.0;
  f.c = 1.0;
  f.chi = 1;
  f.topology = "B4";
  f.P = PowerSeries({1.0, 0.0, 1.0});
  f.theta_block = {false};
  return f;
}

namespace {

FamilyMetric black_hole_base(int n, double c, double m) {
  FamilyMetric f;
  f.mass = m;
  f.c = c;
  f.horizon = solve_r_plus(n, c, m);
  f.beta = beta_smooth(n, c, m, f.horizon);
  f.metric.x_min = f.horizon;
  f.metric.x_max = std::numeric_limits<double>::infinity();
  f.metric.radial_factor = make_inv_sqrtV(n, c, m);
  f.metric.dimension = n;
  // u^2 V(1/u) = 1 + c u^2 - 2 m u^(n-1)
  std::vector<double> p(n, 0.0);
  p[0] = 1.0;
  p[2] = c;
  p[n - 1] = -2.0 * m;
  f.P = PowerSeries(p);
  return f;
}

}  // namespace

FamilyMetric ads_schwarzschild(double m) {
  FamilyMetric f = black_hole_base(4, 1.0, m);
  f.metric.warp_factors = {make_sqrtV(4, 1.0, m), identity_warp()};
  f.metric.fiber.blocks = {FiberBlock::circle(f.beta), FiberBlock::sphere(2)};
  f.metric.name = "ads_schwarzschild_m" + std::to_string(m);
  f.boundary = BoundaryMetric3::circle_cross_sphere(f.beta);
  f.chi = 2;
  f.topology = "R2xS2";
  f.theta_block = {true, false};
  return f;
}

FamilyMetric higher_genus_black_hole(double m, int genus) {
  FamilyMetric f = black_hole_base(4, -1.0, m);
  f.metric.warp_factors = {make_sqrtV(4, -1.0, m), identity_warp()};
  f.metric.fiber.blocks = {FiberBlock::circle(f.beta),
                           FiberBlock::hyperbolic_surface(genus)};
  f.metric.name = "genus" + std::to_string(genus) + "_m" + std::to_string(m);
  f.boundary = BoundaryMetric3::circle_cross_hyperbolic(f.beta, genus);
  f.chi = 2 - 2 * genus;
  f.topology = "R2xSigma" + std::to_string(genus);
  f.theta_block = {true, false};
  return f;
}

FamilyMetric toral_black_hole(double m, const Gram2& gram) {
  FamilyMetric f = black_hole_base(4, 0.0, m);
  f.metric.warp_factors = {make_sqrtV(4, 0.0, m), identity_warp()};
  f.metric.fiber.blocks = {
      FiberBlock::circle(f.beta),
      FiberBlock::flat_torus({gram.a, gram.b, gram.b, gram.c}, 2)};
  f.metric.name = "toral_m" + std::to_string(m);
  Gram3 g3;
  g3.g = {{{f.beta * f.beta, 0, 0}, {0, gram.a, gram.b}, {0, gram.b, gram.c}}};
  f.boundary = BoundaryMetric3::flat_torus3(g3);
  f.chi = 0;
  f.topology = "R2xT2";
  f.theta_block = {true, false};
  return f;
}

FamilyMetric cusp_metric(const Gram3& gram) {
  FamilyMetric f;
  f.metric.x_min = -std::numeric_limits<double>::infinity();
  f.metric.x_max = std::numeric_limits<double>::infinity();
  f.metric.radial_factor = [](double) { return Jet::constant(1.0); };
  f.metric.warp_factors = {[](double r) { return exp(Jet::variable(r)); }};
  std::vector<double> g9(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g9[3 * i + j] = gram.g[i][j];
  f.metric.fiber.blocks = {FiberBlock::flat_torus(g9, 3)};
  f.metric.dimension = 4;
  f.metric.name = "hyperbolic_cusp";
  f.boundary = BoundaryMetric3::flat_torus3(gram);
  f.horizon = -std::numeric_limits<double>::infinity();
  f.mass = 0.0;
  f.c = 0.0;
  f.chi = 0;
  f.topology = "RxT3";
  f.theta_block = {false};
  f.exp_factor = 1.0;
  f.component_series = {PowerSeries::constant(1.0, 8)};
  return f;
}

FamilyMetric hyperbolic_quotient(double beta) {
  if (beta <= 0.0) throw domain_error("translation length must be positive");
  FamilyMetric f;
  f.metric.x_min = 0.0;
  f.metric.x_max = std::numeric_limits<double>::infinity();
  f.metric.radial_factor = [](double) { return Jet::constant(1.0); };
  f.metric.warp_factors = {[](double r) { return cosh(Jet::variable(r)); },
                           [](double r) { return sinh(Jet::variable(r)); }};
  f.metric.fiber.blocks = {FiberBlock::circle(beta), FiberBlock::sphere(2)};
  f.metric.dimension = 4;
  f.metric.name = "hyperbolic_quotient_beta" + std::to_string(beta);
  f.boundary = BoundaryMetric3::circle_cross_sphere(beta);
  f.horizon = 0.0;
  f.beta = beta;
  f.mass = 0.0;
  f.c = 1.0;
  f.chi = 0;
  f.topology = "R3xS1";
  f.theta_block = {false, false};
  f.exp_factor = 2.0;
  // t cosh(r) = 1 + t^2/4 and t sinh(r) = 1 - t^2/4 with t = 2 e^{-r}.
  f.component_series = {PowerSeries({1.0, 0.0, 0.5, 0.0, 1.0 / 16.0, 0.0, 0.0, 0.0}),
                        PowerSeries({1.0, 0.0, -0.5, 0.0, 1.0 / 16.0, 0.0, 0.0, 0.0})};
  return f;
}

FamilyMetric black_hole_dim5(double m) {
  FamilyMetric f = black_hole_base(5, 1.0, m);
  f.metric.warp_factors = {make_sqrtV(5, 1.0, m), identity_warp()};
  f.metric.fiber.blocks = {FiberBlock::circle(f.beta), FiberBlock::sphere(3)};
  f.metric.name = "dim5_schwarzschild_m" + std::to_string(m);
  f.boundary = BoundaryMetric3::circle_cross_sphere(f.beta);  // label only; 4d boundary
  f.chi = 0;
  f.topology = "R2xS3";
  f.theta_block = {true, false};
  return f;
}

FamilyMetric make_family(double c, double m, int genus, const Gram2& gram) {
  if (c > 0.5) return ads_schwarzschild(m);
  if (c < -0.5) return higher_genus_black_hole(m, genus);
  return toral_black_hole(m, gram);
}

std::vector<FamilyMetric> standard_catalog() {
  std::vector<FamilyMetric> v;
  v.push_back(hyperbolic_ball());
  v.push_back(ads_schwarzschild(0.5));
  v.push_back(ads_schwarzschild(1.0));
  v.push_back(ads_schwarzschild(2.0));
  v.push_back(higher_genus_black_hole(0.0));
  v.push_back(higher_genus_black_hole(1.0));
  v.push_back(toral_black_hole(0.5));
  v.push_back(toral_black_hole(1.0));
  Gram3 unit;
  v.push_back(cusp_metric(unit));
  v.push_back(hyperbolic_quotient(std::numbers::pi));
  return v;
}

}  // namespace ahe
