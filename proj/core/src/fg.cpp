#include "ahe/fg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ahe/curvature.hpp"
#include "ahe/errors.hpp"

namespace ahe {

namespace {

constexpr int kSeriesLen = 12;

// Per-block component series of g_t in the boundary orthonormal frame,
// unit normalization: theta blocks carry t^2 V, r-warped blocks t^2 r^2.
std::vector<PowerSeries> block_component_series(const FamilyMetric& fam) {
  std::size_t nb = fam.metric.fiber.blocks.size();
  if (!fam.component_series.empty()) {
    if (fam.component_series.size() != nb)
      throw type_error("component series count does not match fiber blocks");
    return fam.component_series;
  }

  PowerSeries P = fam.P.truncated(kSeriesLen);
  PowerSeries W = P.inv_sqrt();
  PowerSeries q(kSeriesLen - 1);
  for (std::size_t k = 0; k + 1 < W.size(); ++k) q.at(k) = W[k + 1];
  PowerSeries I = q.integrate().truncated(kSeriesLen);
  PowerSeries E = I.exp_series();  // t/u as a series in u

  PowerSeries t_of_u(kSeriesLen);
  for (std::size_t k = 0; k + 1 < t_of_u.size(); ++k) t_of_u.at(k + 1) = E[k];
  PowerSeries u_of_t = t_of_u.revert();

  PowerSeries ratio = I.compose(u_of_t).exp_series();  // t/u at u = u(t)
  PowerSeries Gr = ratio * ratio;                      // t^2 r^2
  PowerSeries Gtheta = Gr * P.compose(u_of_t);         // t^2 V

  std::vector<PowerSeries> out;
  for (std::size_t b = 0; b < nb; ++b)
    out.push_back(fam.theta_block[b] ? Gtheta : Gr);
  return out;
}

Sym3 slots_to_sym3(const std::vector<int>& slots, const std::vector<double>& per_block) {
  Sym3 m = Sym3::zero();
  for (int s = 0; s < 3; ++s) m(s, s) = per_block[slots[s]];
  return m;
}

void require_dimension4(const GeodesicCompactification& c) {
  if (c.family().metric.dimension != 4)
    throw type_error("FG extraction requires a 4-metric with 3d boundary");
}

}  // namespace

std::vector<PowerSeries> fg_block_series(const FamilyMetric& family) {
  return block_component_series(family);
}

std::vector<Sym3> fg_series_coefficients(const GeodesicCompactification& compact,
                                         int order) {
  require_dimension4(compact);
  auto comp = block_component_series(compact.family());
  std::vector<Sym3> gs;
  for (int j = 0; j <= order; ++j) {
    std::vector<double> per_block;
    for (const auto& s : comp) per_block.push_back(s[j]);
    gs.push_back(slots_to_sym3(compact.frame_slots(), per_block));
  }
  return gs;
}

std::vector<Sym3> fg_grid_coefficients(const GeodesicCompactification& compact,
                                       int order) {
  require_dimension4(compact);
  const auto& fam = compact.family();
  std::size_t nb = fam.metric.fiber.blocks.size();

  double t0 = 0.2;
  if (std::isfinite(compact.width())) t0 = std::min(t0, 0.45 * compact.width());
  const int n_nodes = 10;
  const int n_powers = 8;  // fit powers t^1 .. t^8 of G - 1

  std::vector<std::vector<double>> A;
  std::vector<std::vector<double>> rhs(nb);
  double t = t0;
  for (int k = 0; k < n_nodes; ++k, t *= 0.5) {
    std::vector<double> row(n_powers);
    double p = t;
    for (int j = 0; j < n_powers; ++j, p *= t) row[j] = p;
    A.push_back(row);
    auto comps = compact.gt_block_components(t);
    for (std::size_t b = 0; b < nb; ++b) rhs[b].push_back(comps[b] - 1.0);
  }

  std::vector<std::vector<double>> coef(nb);
  for (std::size_t b = 0; b < nb; ++b) coef[b] = least_squares(A, rhs[b]);

  std::vector<Sym3> gs;
  for (int j = 0; j <= order; ++j) {
    std::vector<double> per_block;
    for (std::size_t b = 0; b < nb; ++b)
      per_block.push_back(j == 0 ? 1.0 : coef[b][j - 1]);
    gs.push_back(slots_to_sym3(compact.frame_slots(), per_block));
  }
  return gs;
}

FGExpansion fg_coefficients(const GeodesicCompactification& compact, int order) {
  if (order < 0 || order > 4)
    throw domain_error("FG extraction supports order <= 4");
  auto series = fg_series_coefficients(compact, order);
  auto grid = fg_grid_coefficients(compact, order);

  double worst = 0.0;
  for (int j = 0; j <= order; ++j) {
    double tol = (j <= 3) ? 1e-6 : 1e-4;
    double gap = (series[j] - grid[j]).max_abs();
    worst = std::max(worst, gap);
    if (gap > tol)
      throw consistency_error("FG series and grid paths disagree at order " +
                              std::to_string(j) + ": gap " + std::to_string(gap));
  }

  FGExpansion e;
  e.boundary = compact.boundary();
  e.coefficients = std::move(series);
  e.order = order;
  e.remainder_estimate = worst;
  return e;
}

TTReport tt_check(const FGExpansion& expansion) {
  if (expansion.order < 3) throw domain_error("tt_check needs order >= 3");
  TTReport r;
  r.trace_residual = std::fabs(expansion.coefficients[3].trace());
  r.divergence_residual = 0.0;
  r.divergence_structural = true;
  return r;
}

BoundaryIdentityReport boundary_identities_check(
    const GeodesicCompactification& compact) {
  require_dimension4(compact);
  const int n = compact.family().metric.dimension;
  WarpedProductMetric bar = compact.compactified_metric();

  // Sample the compact curvature on a geometric t-grid and extrapolate t -> 0
  // with a cubic fit; the cusp compactification is exact so no extrapolation.
  BoundaryIdentityReport rep;
  rep.s_gamma = compact.boundary().scalar_curvature();

  double sbar, ric_nn, mixed = 0.0;
  Sym3 ric_T;
  {
    const int K = 7;
    double t0 = 0.05;
    if (std::isfinite(compact.width())) t0 = std::min(t0, 0.3 * compact.width());
    std::vector<std::vector<double>> A;
    std::vector<double> bs, bn, bT0, bT1, bT2;
    double t = t0;
    for (int k = 0; k < K; ++k, t *= 0.5) {
      double r = compact.r_of_t(t);
      CurvatureData c = curvature(bar, r);
      A.push_back({1.0, t, t * t, t * t * t, t * t * t * t});
      bs.push_back(c.scalar);
      bn.push_back(c.ricci[0][0]);
      bT0.push_back(c.ricci[1][1]);
      bT1.push_back(c.ricci[2][2]);
      bT2.push_back(c.ricci[3][3]);
      for (int a = 1; a < n; ++a)
        mixed = std::max(mixed, std::fabs(c.ricci[0][a]));
    }
    sbar = least_squares(A, bs)[0];
    ric_nn = least_squares(A, bn)[0];
    ric_T = Sym3::diag(least_squares(A, bT0)[0], least_squares(A, bT1)[0],
                       least_squares(A, bT2)[0]);
  }

  rep.sbar = sbar;
  rep.ric_normal = ric_nn;
  rep.res_normal_factor = std::fabs(sbar - 2.0 * (n - 1) * ric_nn);
  rep.res_boundary_scalar =
      std::fabs(sbar - (double(n - 1) / double(n - 2)) * rep.s_gamma);
  rep.res_mixed = mixed;
  if (n == 4) {
    Sym3 target = compact.boundary().ricci() * 2.0 -
                  Sym3::identity() * (rep.s_gamma / 4.0);
    rep.res_tangential = (ric_T - target).max_abs();
  }
  return rep;
}

double scalar_monotonicity_profile(const GeodesicCompactification& compact,
                                   const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw domain_error("empty grid");
  const int n = compact.family().metric.dimension;
  WarpedProductMetric bar = compact.compactified_metric();

  double max_residual = 0.0;
  double prev_t = -1.0, prev_s = 0.0;
  std::vector<double> ts = t_grid;
  std::sort(ts.begin(), ts.end());
  for (double t : ts) {
    if (!(t > 0.0) || t >= compact.width())
      throw domain_error("grid point beyond the cut locus");
    double r = compact.r_of_t(t);
    Jet s = scalar_curvature_jet(bar, r);
    Jet tj = compact.t_jet(r);
    double ds_dt = s.deriv(1) / tj.deriv(1);
    double hess2 = radial_hessian_norm2(bar, r);
    double rhs = 2.0 * (n - 1) / t * hess2;
    max_residual = std::max(max_residual, std::fabs(ds_dt - rhs));
    if (ds_dt < -1e-10)
      throw consistency_error("scalar curvature decreasing along t-geodesics");
    if (prev_t > 0.0 && s.value() < prev_s - 1e-8)
      throw consistency_error("sbar not monotone between grid points");
    prev_t = t;
    prev_s = s.value();
  }
  return max_residual;
}

WidthReport width_and_bound(const GeodesicCompactification& compact) {
  require_dimension4(compact);
  WidthReport w;
  w.width = compact.width();
  double s0 = compact.boundary().scalar_curvature();
  if (s0 > 0.0) {
    w.bound = std::sqrt(3.0) * std::numbers::pi / std::sqrt(s0);
    w.alt_bound = 6.0 / std::sqrt(s0);
  } else {
    w.bound = std::numeric_limits<double>::infinity();
    w.alt_bound = std::numeric_limits<double>::infinity();
  }
  w.satisfied = w.width <= w.bound + 1e-12;
  return w;
}

}  // namespace ahe
