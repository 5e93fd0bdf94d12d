#ifndef AHE_CURVATURE_HPP
#define AHE_CURVATURE_HPP

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "ahe/warped_metric.hpp"

namespace ahe {

inline constexpr int kMaxDim = 5;

// All curvature quantities of a warped-product metric at one point, in a
// parallel orthonormal frame adapted to the block structure (e_0 radial).
//
// Conventions: Laplacian = trace of the Hessian; Ricci sign fixed so
// hyperbolic space has Ric = -(n-1) g; norms are full frame-component sums.
struct CurvatureData {
  int n = 4;
  // frame Riemann tensor R[a][b][c][d], R(e_a,e_b,e_b,e_a) = K_ab > 0 on spheres
  std::array<std::array<std::array<std::array<double, kMaxDim>, kMaxDim>, kMaxDim>, kMaxDim>
      riemann{};
  std::array<std::array<double, kMaxDim>, kMaxDim> ricci{};
  double scalar = 0.0;
  std::array<std::array<std::array<std::array<double, kMaxDim>, kMaxDim>, kMaxDim>, kMaxDim>
      weyl{};
  std::map<std::pair<int, int>, double> sectional;  // frame plane (a<b) -> K
  double riemann_norm2 = 0.0;  // |R|^2
  double ricci_norm2 = 0.0;    // |Ric|^2
  double weyl_norm2 = 0.0;     // |W|^2, full 4-index component sum

  double sectional_at(int a, int b) const {
    auto it = sectional.find({std::min(a, b), std::max(a, b)});
    if (it == sectional.end()) throw domain_error("no such frame plane");
    return it->second;
  }
};

// Curvature of the warped product at coordinate x.
CurvatureData curvature(const WarpedProductMetric& metric, double x);

// max over the grid of the frame-component sup-norm of Ric + (n-1) g.
double einstein_residual(const WarpedProductMetric& metric,
                         const std::vector<double>& grid);

// |W|^2(x), full 4-index component sum.
double weyl_energy_density(const WarpedProductMetric& metric, double x);

// Curvature of gbar = rho^2 g computed two ways: by the closed conformal-change
// formulas for Einstein g, and by direct differentiation of the compactified
// warp factors.  The two must agree to tol or a consistency_error is thrown.
// Returns the direct-path curvature.
CurvatureData conformal_curvature(const WarpedProductMetric& metric,
                                  const RadialFn& defining_function, double x,
                                  double tol = 1e-7);

// |grad rho| of the compactified metric at x (w.r.t. gbar = rho^2 g).
double conformal_gradient_norm(const WarpedProductMetric& metric,
                               const RadialFn& defining_function, double x);

// Scalar curvature as a jet in the radial coordinate (for derivative checks).
Jet scalar_curvature_jet(const WarpedProductMetric& metric, double x);

// sum_i d_i (L f_i / f_i)^2 as a value: |Hessian of the arclength function|^2
// for a unit-speed radial coordinate (used by the monotonicity identity).
double radial_hessian_norm2(const WarpedProductMetric& metric, double x);

}  // namespace ahe

#endif
