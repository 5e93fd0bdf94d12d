#include "ahe/black_holes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ahe/action.hpp"
#include "ahe/curvature.hpp"
#include "ahe/errors.hpp"
#include "ahe/roots.hpp"

namespace ahe {

using std::numbers::pi;

BlackHoleSolution make_black_hole(int n, double c, double m, int genus,
                                  const Gram2& gram) {
  check_admissible(n, c, m);
  BlackHoleSolution bh;
  bh.dimension = n;
  bh.c = c;
  bh.m = m;
  if (n == 4) {
    bh.family = make_family(c, m, genus, gram);
  } else if (n == 5 && c > 0.5) {
    bh.family = black_hole_dim5(m);
  } else {
    throw domain_error("black holes materialized for n = 4 and (n=5, c=+1)");
  }
  bh.r_plus = bh.family.horizon;
  bh.beta = bh.family.beta;

  // sanity: the materialized ansatz must be Einstein to tolerance
  std::vector<double> grid;
  for (int i = 1; i <= 8; ++i) grid.push_back(bh.r_plus + 0.3 * i * i);
  double res = einstein_residual(bh.family.metric, grid);
  if (res > 1e-8)
    throw invalid_metric_error("Einstein residual too large: " + std::to_string(res));
  return bh;
}

double beta_of_rplus(double c, double r_plus) {
  if (r_plus <= 0.0) throw domain_error("r_plus must be positive");
  if (c < -0.5 && r_plus <= 1.0 / std::sqrt(3.0))
    throw domain_error("c = -1 requires r_plus > 1/sqrt(3)");
  return 4.0 * pi * r_plus / (c + 3.0 * r_plus * r_plus);
}

double dbeta_drplus(double c, double r_plus) {
  double d = c + 3.0 * r_plus * r_plus;
  return 4.0 * pi * (c - 3.0 * r_plus * r_plus) / (d * d);
}

double mass_of_rplus(double c, double r_plus) {
  return 0.5 * r_plus * (c + r_plus * r_plus);
}

CompetitorSet masses_for_beta(double c, double beta) {
  if (beta <= 0.0) throw domain_error("beta must be positive");
  CompetitorSet set;

  std::vector<double> roots;
  if (c > 0.5) {
    // 3 beta r^2 - 4 pi r + beta = 0
    double disc = 4.0 * pi * pi - 3.0 * beta * beta;
    if (disc > 1e-14) {
      double s = std::sqrt(disc);
      roots = {(2.0 * pi - s) / (3.0 * beta), (2.0 * pi + s) / (3.0 * beta)};
    } else if (std::fabs(disc) <= 1e-14) {
      roots = {2.0 * pi / (3.0 * beta)};
    }
  } else if (c < -0.5) {
    // 3 beta r^2 - 4 pi r - beta = 0, positive root only
    double s = std::sqrt(4.0 * pi * pi + 3.0 * beta * beta);
    roots = {(2.0 * pi + s) / (3.0 * beta)};
  } else {
    roots = {4.0 * pi / (3.0 * beta)};
  }

  for (double r : roots) {
    Competitor comp;
    comp.kind = "black_hole";
    comp.r_plus = r;
    comp.m = mass_of_rplus(c, r);
    if (c > 0.5) {
      comp.topology = "S2xR2";
      set.boundary = BoundaryMetric3::circle_cross_sphere(beta);
    } else if (c < -0.5) {
      comp.topology = "R2xSigma2";
      set.boundary = BoundaryMetric3::circle_cross_hyperbolic(beta, 2);
    } else {
      comp.topology = "R2xT2";
      Gram3 g3 = Gram3::diag(beta * beta, 1.0, 1.0);
      set.boundary = BoundaryMetric3::flat_torus3(g3);
    }
    FamilyMetric fam = make_family(c, comp.m);
    comp.renormalized_volume = renormalized_volume_closed_form(fam);
    set.members.push_back(comp);
  }
  std::sort(set.members.begin(), set.members.end(),
            [](const Competitor& a, const Competitor& b) { return a.m < b.m; });

  if (c > 0.5) {
    set.boundary = BoundaryMetric3::circle_cross_sphere(beta);
    Competitor q;
    q.kind = "hyperbolic_quotient";
    q.topology = "R3xS1";
    q.m = 0.0;
    q.r_plus = 0.0;
    q.renormalized_volume = 0.0;  // chi = 0 and W = 0 in the identity (3.7)
    q.twist_alpha = 0.0;
    set.members.push_back(q);
  }
  return set;
}

BetaExtremum beta_extremum(double c) {
  BetaExtremum e;
  if (c > 0.5) {
    e.has_interior_max = true;
    e.r_star = brent([c](double r) { return dbeta_drplus(c, r); }, 0.2, 2.0, 1e-15);
    e.beta_star = beta_of_rplus(c, e.r_star);
    return e;
  }
  // beta is monotone on the admissible domain: certify by the derivative sign.
  double lo = (c < -0.5) ? 1.0 / std::sqrt(3.0) + 1e-6 : 1e-3;
  int sign = dbeta_drplus(c, lo + 0.1) < 0.0 ? -1 : 1;
  for (double r = lo; r < 50.0; r *= 1.5) {
    double d = dbeta_drplus(c, r);
    if (d * sign < 0.0) throw consistency_error("beta derivative changes sign");
  }
  e.monotone_sign = sign;
  return e;
}

RescalingReport toral_rescaling_isometry(double m, int samples) {
  if (m <= 0.0) throw domain_error("rescaling isometry needs m > 0");
  FamilyMetric gm = toral_black_hole(m);
  FamilyMetric g1 = toral_black_hole(1.0);
  const double lambda = std::cbrt(m);

  RescalingReport rep;
  rep.samples = samples;
  for (int i = 0; i < samples; ++i) {
    double s = g1.horizon * (1.0 + 0.25 * (i + 1));  // sample points for g_1
    double r = lambda * s;                           // matched point for g_m
    CurvatureData c1 = curvature(g1.metric, s);
    CurvatureData cm = curvature(gm.metric, r);
    rep.max_invariant_gap =
        std::max({rep.max_invariant_gap, std::fabs(c1.scalar - cm.scalar),
                  std::fabs(c1.riemann_norm2 - cm.riemann_norm2),
                  std::fabs(c1.weyl_norm2 - cm.weyl_norm2)});
  }
  return rep;
}

BoundaryMetric3 conformal_infinity(const BlackHoleSolution& bh,
                                   const std::vector<double>& fiber_periods) {
  if (bh.dimension != 4)
    throw type_error("conformal infinity as a 3-metric needs n = 4");
  if (bh.c == 0.0) {
    const auto& blk = bh.family.metric.fiber.blocks[1];
    if (!fiber_periods.empty()) {
      if (fiber_periods.size() != 2)
        throw type_error("toral fiber needs exactly two periods");
      double p1 = std::sqrt(blk.gram[0]);
      double p2 = std::sqrt(blk.gram[3]);
      if (std::fabs(fiber_periods[0] - p1) > 1e-12 ||
          std::fabs(fiber_periods[1] - p2) > 1e-12)
        throw type_error("fiber periods inconsistent with the descriptor");
    }
    Gram3 g3;
    g3.g = {{{bh.beta * bh.beta, 0, 0},
             {0, blk.gram[0], blk.gram[1]},
             {0, blk.gram[2], blk.gram[3]}}};
    return BoundaryMetric3::flat_torus3(g3);
  }
  if (!fiber_periods.empty())
    throw type_error("fiber periods only apply to the toral family");
  return bh.family.boundary;
}

}  // namespace ahe
