#include "ahe/curvature.hpp"

#include <cmath>

namespace ahe {

namespace {

// Shift a jet to the jet of its derivative; the top slot is no longer valid,
// so callers must not consume the full order after repeated shifts.
Jet jet_derivative(const Jet& u) {
  Jet r;
  for (int k = 0; k < kJetOrder; ++k) r.d[k] = u.d[k + 1];
  r.d[kJetOrder] = 0.0;
  return r;
}

struct BlockGeom {
  Jet f;    // warp factor
  Jet Lf;   // arclength derivative f'/f_r
  Jet LLf;  // second arclength derivative
  int dim = 1;
  double k = 0.0;  // sectional curvature of the unwarped block metric
};

struct Geom {
  Jet f_r;
  std::vector<BlockGeom> blocks;
  int n = 4;
};

Geom radial_geometry(const WarpedProductMetric& m, double x) {
  m.validate_at(x);
  Geom g;
  g.n = m.dimension;
  g.f_r = m.radial_factor(x);
  if (g.f_r.value() <= 0.0)
    throw invalid_metric_error("radial factor must be positive");
  for (std::size_t i = 0; i < m.fiber.blocks.size(); ++i) {
    BlockGeom b;
    b.f = m.warp_factors[i](x);
    if (b.f.value() <= 0.0)
      throw invalid_metric_error("warp factor must be positive on the interval");
    b.Lf = jet_derivative(b.f) / g.f_r;
    b.LLf = jet_derivative(b.Lf) / g.f_r;
    b.dim = m.fiber.blocks[i].dim;
    b.k = m.fiber.blocks[i].sectional;
    g.blocks.push_back(b);
  }
  return g;
}

// frame index -> block index (-1 for the radial direction)
std::vector<int> frame_blocks(const Geom& g) {
  std::vector<int> fb;
  fb.push_back(-1);
  for (std::size_t i = 0; i < g.blocks.size(); ++i)
    for (int d = 0; d < g.blocks[i].dim; ++d) fb.push_back(static_cast<int>(i));
  return fb;
}

double plane_curvature(const Geom& g, int bi, int bj) {
  // bi, bj are block indices, -1 = radial.
  if (bi == bj && bi >= 0) {
    const auto& b = g.blocks[bi];
    double lf = b.Lf.value();
    return (b.k - lf * lf) / (b.f.value() * b.f.value());
  }
  if (bi == -1 || bj == -1) {
    const auto& b = g.blocks[bi == -1 ? bj : bi];
    return -b.LLf.value() / b.f.value();
  }
  const auto& a = g.blocks[bi];
  const auto& b = g.blocks[bj];
  return -(a.Lf.value() * b.Lf.value()) / (a.f.value() * b.f.value());
}

}  // namespace

CurvatureData curvature(const WarpedProductMetric& metric, double x) {
  Geom g = radial_geometry(metric, x);
  const int n = g.n;
  if (n > kMaxDim) throw domain_error("dimension exceeds toolkit maximum");
  auto fb = frame_blocks(g);

  CurvatureData out;
  out.n = n;

  // Sectional curvatures of the adapted frame planes; the frame Riemann
  // tensor of these block metrics is diagonal: R_abab = K_ab.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      double K = plane_curvature(g, fb[a], fb[b]);
      out.sectional[{a, b}] = K;
      out.riemann[a][b][a][b] = K;
      out.riemann[b][a][b][a] = K;
      out.riemann[a][b][b][a] = -K;
      out.riemann[b][a][a][b] = -K;
    }

  // Ricci: Ric_ab = sum_c R_acbc, diagonal here.
  for (int a = 0; a < n; ++a) {
    double s = 0.0;
    for (int c = 0; c < n; ++c)
      if (c != a) s += out.sectional.at({std::min(a, c), std::max(a, c)});
    out.ricci[a][a] = s;
  }
  out.scalar = 0.0;
  for (int a = 0; a < n; ++a) out.scalar += out.ricci[a][a];

  // Weyl by the standard Ricci decomposition in an orthonormal frame.
  const double cn = 1.0 / (n - 2);
  const double cs = out.scalar / ((n - 1) * (n - 2));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double w = out.riemann[a][b][c][d];
          w -= cn * (out.ricci[a][c] * (b == d) - out.ricci[a][d] * (b == c) +
                     (a == c) * out.ricci[b][d] - (a == d) * out.ricci[b][c]);
          w += cs * ((a == c) * (b == d) - (a == d) * (b == c));
          out.weyl[a][b][c][d] = w;
        }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      out.ricci_norm2 += out.ricci[a][b] * out.ricci[a][b];
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          out.riemann_norm2 += out.riemann[a][b][c][d] * out.riemann[a][b][c][d];
          out.weyl_norm2 += out.weyl[a][b][c][d] * out.weyl[a][b][c][d];
        }
    }
  return out;
}

double einstein_residual(const WarpedProductMetric& metric,
                         const std::vector<double>& grid) {
  if (grid.empty()) throw domain_error("einstein_residual: empty grid");
  double worst = 0.0;
  const int n = metric.dimension;
  for (double x : grid) {
    CurvatureData c = curvature(metric, x);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double target = (a == b) ? -(n - 1.0) : 0.0;
        worst = std::max(worst, std::fabs(c.ricci[a][b] - target));
      }
  }
  return worst;
}

double weyl_energy_density(const WarpedProductMetric& metric, double x) {
  return curvature(metric, x).weyl_norm2;
}

Jet scalar_curvature_jet(const WarpedProductMetric& metric, double x) {
  Geom g = radial_geometry(metric, x);
  Jet ric00 = Jet::constant(0.0);
  for (const auto& b : g.blocks) ric00 = ric00 - b.dim * (b.LLf / b.f);
  Jet s = ric00;
  for (std::size_t i = 0; i < g.blocks.size(); ++i) {
    const auto& bi = g.blocks[i];
    Jet ric_i = -(bi.LLf / bi.f) +
                (bi.dim - 1.0) * (Jet::constant(bi.k) - bi.Lf * bi.Lf) / (bi.f * bi.f);
    for (std::size_t j = 0; j < g.blocks.size(); ++j) {
      if (j == i) continue;
      const auto& bj = g.blocks[j];
      ric_i = ric_i - bj.dim * (bi.Lf * bj.Lf) / (bi.f * bj.f);
    }
    s = s + ric_i * static_cast<double>(bi.dim);
  }
  return s;
}

double radial_hessian_norm2(const WarpedProductMetric& metric, double x) {
  Geom g = radial_geometry(metric, x);
  double s = 0.0;
  for (const auto& b : g.blocks) {
    double v = b.Lf.value() / b.f.value();
    s += b.dim * v * v;
  }
  return s;
}

namespace {

WarpedProductMetric compactified(const WarpedProductMetric& metric,
                                 const RadialFn& rho) {
  WarpedProductMetric bar = metric;
  bar.name = metric.name + "_compactified";
  RadialFn base_r = metric.radial_factor;
  bar.radial_factor = [base_r, rho](double x) { return rho(x) * base_r(x); };
  bar.warp_factors.clear();
  for (const auto& w : metric.warp_factors) {
    bar.warp_factors.push_back([w, rho](double x) { return rho(x) * w(x); });
  }
  return bar;
}

}  // namespace

double conformal_gradient_norm(const WarpedProductMetric& metric,
                               const RadialFn& defining_function, double x) {
  Jet rho = defining_function(x);
  if (rho.value() <= 0.0) throw domain_error("defining function not positive");
  Jet Fr = rho * metric.radial_factor(x);
  return std::fabs(rho.deriv(1)) / Fr.value();
}

CurvatureData conformal_curvature(const WarpedProductMetric& metric,
                                  const RadialFn& defining_function, double x,
                                  double tol) {
  Jet rho = defining_function(x);
  if (rho.value() <= 0.0) throw domain_error("defining function not positive");
  const int n = metric.dimension;

  // Path (b): direct curvature of the compactified warped product.
  WarpedProductMetric bar = compactified(metric, defining_function);
  CurvatureData direct = curvature(bar, x);

  // Path (a): closed conformal-change formulas, valid for Einstein g.
  CurvatureData base = curvature(metric, x);
  Geom gb = radial_geometry(bar, x);
  auto fb = frame_blocks(gb);

  // Hessian of rho w.r.t. gbar in the gbar-orthonormal frame (diagonal).
  Jet Lrho = jet_derivative(rho) / gb.f_r;
  Jet LLrho = jet_derivative(Lrho) / gb.f_r;
  std::vector<double> hess(n, 0.0);
  hess[0] = LLrho.value();
  for (int a = 1; a < n; ++a) {
    const auto& blk = gb.blocks[fb[a]];
    hess[a] = Lrho.value() * blk.Lf.value() / blk.f.value();
  }
  double lap = 0.0;
  for (int a = 0; a < n; ++a) lap += hess[a];
  const double grad2 = Lrho.value() * Lrho.value();
  const double rv = rho.value();

  double max_gap = 0.0;

  // Sectional curvatures via the conformal formula.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      double Kab = base.sectional.at({a, b});
      double Kbar = (Kab + grad2) / (rv * rv) - (hess[a] + hess[b]) / rv;
      max_gap = std::max(max_gap, std::fabs(Kbar - direct.sectional.at({a, b})));
    }

  // Ricci and scalar via the Einstein-reduced formulas.
  const double mid = (n - 1) * (grad2 - 1.0) / (rv * rv) - lap / rv;
  for (int a = 0; a < n; ++a) {
    double ric_bar = -(n - 2) * hess[a] / rv + mid;
    max_gap = std::max(max_gap, std::fabs(ric_bar - direct.ricci[a][a]));
  }
  const double sbar = -2.0 * (n - 1) * lap / rv +
                      n * (n - 1) * (grad2 - 1.0) / (rv * rv);
  max_gap = std::max(max_gap, std::fabs(sbar - direct.scalar) /
                                  std::max(1.0, std::fabs(direct.scalar)));

  if (max_gap > tol)
    throw consistency_error("conformal curvature paths disagree: gap " +
                            std::to_string(max_gap));
  return direct;
}

}  // namespace ahe
