#include "ahe/boundary.hpp"

#include <cmath>
#include <numbers>

#include "ahe/errors.hpp"

namespace ahe {

BoundaryMetric3 BoundaryMetric3::round_sphere(double radius) {
  if (radius <= 0.0) throw domain_error("sphere radius must be positive");
  return {RoundSphere3{radius}};
}

BoundaryMetric3 BoundaryMetric3::flat_torus3(const Gram3& gram) {
  if (!gram.spd()) throw invalid_metric_error("T3 Gram matrix must be SPD");
  return {FlatTorus3Kind{gram}};
}

BoundaryMetric3 BoundaryMetric3::circle_cross_sphere(double beta) {
  if (beta <= 0.0) throw domain_error("circle length must be positive");
  return {CircleCrossSurface{beta, CircleCrossSurface::Surface::Sphere2, 2, {}}};
}

BoundaryMetric3 BoundaryMetric3::circle_cross_hyperbolic(double beta, int genus) {
  if (beta <= 0.0) throw domain_error("circle length must be positive");
  if (genus < 2) throw domain_error("hyperbolic surface needs genus >= 2");
  return {CircleCrossSurface{beta, CircleCrossSurface::Surface::Hyperbolic, genus, {}}};
}

BoundaryMetric3 BoundaryMetric3::circle_cross_torus(double beta, const Gram2& gram) {
  if (beta <= 0.0) throw domain_error("circle length must be positive");
  if (!gram.spd()) throw invalid_metric_error("T2 Gram matrix must be SPD");
  return {CircleCrossSurface{beta, CircleCrossSurface::Surface::FlatTorus2, 2, gram}};
}

Sym3 BoundaryMetric3::ricci() const {
  if (std::holds_alternative<RoundSphere3>(kind)) {
    double a = std::get<RoundSphere3>(kind).radius;
    return Sym3::identity() * (2.0 / (a * a));
  }
  if (std::holds_alternative<FlatTorus3Kind>(kind)) return Sym3::zero();
  const auto& cs = std::get<CircleCrossSurface>(kind);
  switch (cs.surface) {
    case CircleCrossSurface::Surface::Sphere2:
      return Sym3::diag(0.0, 1.0, 1.0);
    case CircleCrossSurface::Surface::Hyperbolic:
      return Sym3::diag(0.0, -1.0, -1.0);
    case CircleCrossSurface::Surface::FlatTorus2:
      return Sym3::zero();
  }
  throw domain_error("unknown boundary kind");
}

double BoundaryMetric3::scalar_curvature() const { return ricci().trace(); }

double BoundaryMetric3::volume() const {
  using std::numbers::pi;
  if (std::holds_alternative<RoundSphere3>(kind)) {
    double a = std::get<RoundSphere3>(kind).radius;
    return 2.0 * pi * pi * a * a * a;
  }
  if (std::holds_alternative<FlatTorus3Kind>(kind))
    return std::sqrt(std::get<FlatTorus3Kind>(kind).gram.det());
  const auto& cs = std::get<CircleCrossSurface>(kind);
  switch (cs.surface) {
    case CircleCrossSurface::Surface::Sphere2:
      return cs.beta * 4.0 * pi;
    case CircleCrossSurface::Surface::Hyperbolic:
      return cs.beta * 4.0 * pi * (cs.genus - 1);
    case CircleCrossSurface::Surface::FlatTorus2:
      return cs.beta * std::sqrt(cs.gram.det());
  }
  throw domain_error("unknown boundary kind");
}

std::string BoundaryMetric3::label() const {
  if (std::holds_alternative<RoundSphere3>(kind))
    return "S3(" + std::to_string(std::get<RoundSphere3>(kind).radius) + ")";
  if (std::holds_alternative<FlatTorus3Kind>(kind)) return "T3";
  const auto& cs = std::get<CircleCrossSurface>(kind);
  std::string base = "S1(" + std::to_string(cs.beta) + ")x";
  switch (cs.surface) {
    case CircleCrossSurface::Surface::Sphere2:
      return base + "S2(1)";
    case CircleCrossSurface::Surface::Hyperbolic:
      return base + "Sigma" + std::to_string(cs.genus);
    case CircleCrossSurface::Surface::FlatTorus2:
      return base + "T2";
  }
  return "?";
}

Sym3 g2_closed_form(const BoundaryMetric3& boundary) {
  Sym3 ric = boundary.ricci();
  double s = boundary.scalar_curvature();
  return (ric - Sym3::identity() * (s / 4.0)) * (-1.0);
}

Sym3 g2_printed_variant(const BoundaryMetric3& boundary) {
  return g2_closed_form(boundary) * 0.5;
}

}  // namespace ahe
