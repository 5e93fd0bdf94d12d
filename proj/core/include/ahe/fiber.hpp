#ifndef AHE_FIBER_HPP
#define AHE_FIBER_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ahe/errors.hpp"
#include "ahe/linalg.hpp"

namespace ahe {

// One homogeneous block of the fiber: a circle, a round sphere, a hyperbolic
// surface, or a flat torus with a Gram matrix on unit-period coordinates.
struct FiberBlock {
  enum class Kind { Circle, Sphere, HyperbolicSurface, FlatTorus };

  Kind kind = Kind::Circle;
  int dim = 1;
  double sectional = 0.0;   // constant sectional curvature of the block metric
  double period = 1.0;      // Circle only: circumference
  int genus = 2;            // HyperbolicSurface only
  std::vector<double> gram; // FlatTorus only: row-major dim x dim SPD matrix

  static FiberBlock circle(double beta) {
    if (beta <= 0.0) throw domain_error("circle period must be positive");
    FiberBlock b;
    b.kind = Kind::Circle;
    b.dim = 1;
    b.period = beta;
    return b;
  }
  static FiberBlock sphere(int d) {
    if (d < 2) throw domain_error("sphere block needs dim >= 2");
    FiberBlock b;
    b.kind = Kind::Sphere;
    b.dim = d;
    b.sectional = 1.0;
    return b;
  }
  static FiberBlock hyperbolic_surface(int genus) {
    if (genus < 2) throw domain_error("hyperbolic surface needs genus >= 2");
    FiberBlock b;
    b.kind = Kind::HyperbolicSurface;
    b.dim = 2;
    b.sectional = -1.0;
    b.genus = genus;
    return b;
  }
  static FiberBlock flat_torus(const std::vector<double>& gram, int d) {
    FiberBlock b;
    b.kind = Kind::FlatTorus;
    b.dim = d;
    b.sectional = 0.0;
    b.gram = gram;
    if (static_cast<int>(gram.size()) != d * d)
      throw type_error("flat torus Gram matrix has wrong size");
    if (d == 2) {
      Gram2 g{gram[0], gram[1], gram[3]};
      if (std::fabs(gram[1] - gram[2]) > 1e-14 || !g.spd())
        throw invalid_metric_error("torus Gram matrix must be symmetric positive definite");
    } else if (d == 3) {
      Gram3 g;
      g.g = {{{gram[0], gram[1], gram[2]},
              {gram[3], gram[4], gram[5]},
              {gram[6], gram[7], gram[8]}}};
      if (!g.spd()) throw invalid_metric_error("torus Gram matrix must be SPD");
    }
    return b;
  }

  // Total volume of the block with its unit (unwarped) metric.
  double volume() const {
    switch (kind) {
      case Kind::Circle:
        return period;
      case Kind::Sphere:
        if (dim == 2) return 4.0 * std::numbers::pi;
        if (dim == 3) return 2.0 * std::numbers::pi * std::numbers::pi;
        throw domain_error("sphere volume implemented for dim 2,3");
      case Kind::HyperbolicSurface:
        return 4.0 * std::numbers::pi * (genus - 1);  // Gauss-Bonnet, K = -1
      case Kind::FlatTorus: {
        if (dim == 2) return std::sqrt(Gram2{gram[0], gram[1], gram[3]}.det());
        Gram3 g;
        g.g = {{{gram[0], gram[1], gram[2]},
                {gram[3], gram[4], gram[5]},
                {gram[6], gram[7], gram[8]}}};
        return std::sqrt(g.det());
      }
    }
    throw domain_error("unknown fiber block");
  }

  std::string label() const {
    switch (kind) {
      case Kind::Circle:
        return "S1(" + std::to_string(period) + ")";
      case Kind::Sphere:
        return "S" + std::to_string(dim) + "(1)";
      case Kind::HyperbolicSurface:
        return "Sigma" + std::to_string(genus) + "(-1)";
      case Kind::FlatTorus:
        return "T" + std::to_string(dim);
    }
    return "?";
  }
};

struct FiberDescriptor {
  std::vector<FiberBlock> blocks;

  int dim() const {
    int d = 0;
    for (const auto& b : blocks) d += b.dim;
    return d;
  }
  double volume() const {
    double v = 1.0;
    for (const auto& b : blocks) v *= b.volume();
    return v;
  }
};

}  // namespace ahe

#endif
