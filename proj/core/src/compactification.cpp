#include "ahe/compactification.hpp"

#include <cmath>

#include "ahe/errors.hpp"
#include "ahe/quadrature.hpp"

namespace ahe {

namespace {

bool close(double x, double y) { return std::fabs(x - y) <= 1e-9 * (1.0 + std::fabs(x)); }

bool same_boundary(const BoundaryMetric3& a, const BoundaryMetric3& b) {
  if (a.kind.index() != b.kind.index()) return false;
  if (std::holds_alternative<RoundSphere3>(a.kind))
    return close(std::get<RoundSphere3>(a.kind).radius,
                 std::get<RoundSphere3>(b.kind).radius);
  if (std::holds_alternative<FlatTorus3Kind>(a.kind)) {
    const auto& ga = std::get<FlatTorus3Kind>(a.kind).gram.g;
    const auto& gb = std::get<FlatTorus3Kind>(b.kind).gram.g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!close(ga[i][j], gb[i][j])) return false;
    return true;
  }
  const auto& ca = std::get<CircleCrossSurface>(a.kind);
  const auto& cb = std::get<CircleCrossSurface>(b.kind);
  if (ca.surface != cb.surface || !close(ca.beta, cb.beta)) return false;
  if (ca.surface == CircleCrossSurface::Surface::Hyperbolic &&
      ca.genus != cb.genus)
    return false;
  if (ca.surface == CircleCrossSurface::Surface::FlatTorus2)
    return close(ca.gram.a, cb.gram.a) && close(ca.gram.b, cb.gram.b) &&
           close(ca.gram.c, cb.gram.c);
  return true;
}

// int_a^b 2 xi f_r(h + xi^2) d(xi), the arclength from the inner end in the
// regularizing coordinate xi = sqrt(r - h).  For a simple horizon the
// integrand is an even analytic function of xi, but below xi_0 the argument
// h + xi^2 is quantization-noise dominated, so that piece is integrated from
// the two-term even Taylor model a0 + a2 xi^2 fitted at xi_0 and xi_0/2.
double horizon_arc_integral(const RadialFn& fr, double h, double a, double b) {
  auto g = [&](double xi) { return 2.0 * xi * fr(h + xi * xi).value(); };
  if (b <= a) return 0.0;
  // a sqrt singularity grows by ~100x between these probes; a regular factor
  // stays put
  const bool singular = fr(h + 1e-6).value() > 10.0 * fr(h + 1e-2).value();
  if (!singular) {
    auto direct = [&](double r) { return fr(r).value(); };
    return integrate(direct, h + a * a, h + b * b, 1e-13);
  }
  double xi0 = std::min(1e-2, 0.5 * b);
  if (a >= xi0) return integrate(g, a, b, 1e-13);
  double g1 = g(xi0), g2 = g(0.5 * xi0);
  double a0 = (4.0 * g2 - g1) / 3.0;
  double a2 = (g1 - g2) / (0.75 * xi0 * xi0);
  auto model_int = [&](double x) { return a0 * x + a2 * x * x * x / 3.0; };
  return (model_int(xi0) - model_int(a)) + integrate(g, xi0, b, 1e-13);
}

}  // namespace

GeodesicCompactification::GeodesicCompactification(const FamilyMetric& family,
                                                   const BoundaryMetric3& boundary,
                                                   double scale)
    : family_(family), boundary_(boundary), scale_(scale) {
  if (scale <= 0.0) throw domain_error("boundary scale must be positive");
  if (!same_boundary(family.boundary, boundary))
    throw type_error("boundary incompatible with the metric's conformal infinity");

  for (std::size_t b = 0; b < family_.metric.fiber.blocks.size(); ++b)
    for (int k = 0; k < family_.metric.fiber.blocks[b].dim; ++k)
      frame_slots_.push_back(static_cast<int>(b));

  if (family_.exponential()) {
    width_ = std::isfinite(family_.metric.x_min)
                 ? scale_ * family_.exp_factor * std::exp(-family_.metric.x_min)
                 : std::numeric_limits<double>::infinity();
    return;
  }

  // Asymptotic series of I(u) = int_0^u (1/sqrt(P(v)) - 1) / v dv.
  PowerSeries P = family_.P.truncated(14);
  PowerSeries W = P.inv_sqrt();
  PowerSeries q(W.size() - 1);
  for (std::size_t k = 0; k + 1 < W.size(); ++k) q.at(k) = W[k + 1];
  tail_series_ = q.integrate();

  double h = family_.horizon;
  r_far_ = std::max(50.0, 10.0 * std::max(1.0, h));
  r_ref_ = (h > 0.0) ? 2.0 * h : 1.0;
  log_t_ref_ = std::log(scale_) + I_of(r_ref_) - std::log(r_ref_);

  // Width: t at the inner end of the interval, via the sqrt-substitution
  // s = h + xi^2 which regularizes 1/sqrt(V) at a simple horizon.
  double inner_int = horizon_arc_integral(family_.metric.radial_factor, h, 0.0,
                                          std::sqrt(r_ref_ - h));
  width_ = std::exp(log_t_ref_ + inner_int);
}

double GeodesicCompactification::asymptotic_tail(double u) const {
  return tail_series_.eval(u);
}

double GeodesicCompactification::I_of(double r) const {
  if (r >= r_far_) return asymptotic_tail(1.0 / r);
  const RadialFn fr = family_.metric.radial_factor;
  auto f = [&](double s) { return fr(s).value() - 1.0 / s; };
  return integrate(f, r, r_far_, 1e-13) + asymptotic_tail(1.0 / r_far_);
}

double GeodesicCompactification::log_t_deep(double r) const {
  const double h = family_.horizon;
  double a = std::sqrt(std::max(0.0, r - h));
  double b = std::sqrt(r_ref_ - h);
  return log_t_ref_ + horizon_arc_integral(family_.metric.radial_factor, h, a, b);
}

double GeodesicCompactification::t_of_r(double r) const {
  if (family_.exponential()) return scale_ * family_.exp_factor * std::exp(-r);
  if (!(r > family_.horizon)) throw domain_error("r at or below the inner end");
  if (r >= r_ref_) return std::exp(std::log(scale_) + I_of(r) - std::log(r));
  return std::exp(log_t_deep(r));
}

double GeodesicCompactification::r_of_t(double t) const {
  if (!(t > 0.0)) throw domain_error("t must be positive");
  if (t >= width_) throw domain_error("t beyond the width of the compactification");
  if (family_.exponential()) return std::log(scale_ * family_.exp_factor / t);
  const RadialFn fr = family_.metric.radial_factor;
  const double log_target = std::log(t);
  double r = std::max(scale_ / t, family_.horizon + 0.5 * (r_ref_ - family_.horizon));
  for (int it = 0; it < 80; ++it) {
    double phi = std::log(t_of_r(r)) - log_target;
    double step = phi / fr(r).value();
    double rn = r + step;
    if (!(rn > family_.horizon)) rn = 0.5 * (r + family_.horizon);
    if (std::fabs(rn - r) < 1e-14 * (1.0 + std::fabs(rn))) return rn;
    r = rn;
  }
  throw numerical_error("r_of_t: Newton iteration did not converge");
}

Jet GeodesicCompactification::t_jet(double r) const {
  Jet fr = family_.metric.radial_factor(r);
  Jet t;
  t.d[0] = t_of_r(r);
  // t' = -f_r t, differentiated recursively (Leibniz).
  for (int k = 0; k + 1 <= kJetOrder; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += detail::kBinom[k][j] * fr.d[j] * t.d[k - j];
    t.d[k + 1] = -s;
  }
  return t;
}

std::vector<double> GeodesicCompactification::gt_block_components(double t) const {
  std::vector<double> out;
  double r = r_of_t(t);
  for (const auto& w : family_.metric.warp_factors) {
    double W = t * w(r).value() / scale_;
    out.push_back(W * W);
  }
  return out;
}

WarpedProductMetric GeodesicCompactification::compactified_metric() const {
  WarpedProductMetric bar = family_.metric;
  bar.name = family_.metric.name + "_geodesic_bar";
  auto self = *this;  // value copy keeps the closure self-contained
  RadialFn base_r = family_.metric.radial_factor;
  bar.radial_factor = [self, base_r](double r) { return self.t_jet(r) * base_r(r); };
  bar.warp_factors.clear();
  for (const auto& w : family_.metric.warp_factors)
    bar.warp_factors.push_back(
        [self, w](double r) { return self.t_jet(r) * w(r); });
  return bar;
}

GeodesicCompactification geodesic_compactification(const FamilyMetric& family,
                                                   const BoundaryMetric3& boundary,
                                                   double scale) {
  return GeodesicCompactification(family, boundary, scale);
}

}  // namespace ahe
