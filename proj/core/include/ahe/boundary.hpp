#ifndef AHE_BOUNDARY_HPP
#define AHE_BOUNDARY_HPP

#include <string>
#include <variant>

#include "ahe/linalg.hpp"

namespace ahe {

// Homogeneous 3-dimensional boundary metrics with closed-form Ricci data,
// expressed in the natural orthonormal frame (circle direction first for the
// product kinds).
struct RoundSphere3 {
  double radius = 1.0;
};

struct FlatTorus3Kind {
  Gram3 gram;  // lattice Gram matrix on unit-period coordinates
};

struct CircleCrossSurface {
  enum class Surface { Sphere2, Hyperbolic, FlatTorus2 };
  double beta = 1.0;  // circle length
  Surface surface = Surface::Sphere2;
  int genus = 2;      // Hyperbolic only
  Gram2 gram;         // FlatTorus2 only
};

struct BoundaryMetric3 {
  std::variant<RoundSphere3, FlatTorus3Kind, CircleCrossSurface> kind;

  static BoundaryMetric3 round_sphere(double radius);
  static BoundaryMetric3 flat_torus3(const Gram3& gram);
  static BoundaryMetric3 circle_cross_sphere(double beta);
  static BoundaryMetric3 circle_cross_hyperbolic(double beta, int genus);
  static BoundaryMetric3 circle_cross_torus(double beta, const Gram2& gram);

  Sym3 ricci() const;           // frame components
  double scalar_curvature() const;
  double volume() const;
  std::string label() const;
};

// g_(2) under the toolkit's validated convention -(Ric - (s/4) gamma).
Sym3 g2_closed_form(const BoundaryMetric3& boundary);

// The coefficient as printed in the source formula, exposed for documentation
// only; it disagrees with the series oracle by a factor 2.
Sym3 g2_printed_variant(const BoundaryMetric3& boundary);

}  // namespace ahe

#endif
