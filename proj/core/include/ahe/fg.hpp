#ifndef AHE_FG_HPP
#define AHE_FG_HPP

#include <vector>

#include "ahe/compactification.hpp"
#include "ahe/linalg.hpp"

namespace ahe {

// Ordered constant coefficient matrices of g_t = g_(0) + t^2 g_(2) + ... in a
// fixed boundary orthonormal frame (circle direction first where present).
struct FGExpansion {
  BoundaryMetric3 boundary;
  std::vector<Sym3> coefficients;  // index j = g_(j), 0 <= j <= order
  int order = 3;
  double remainder_estimate = 0.0;  // max series-vs-grid componentwise gap
};

// Coefficient extraction by truncated-series composition, cross-checked
// against an independent grid extraction; disagreement beyond tolerance
// throws consistency_error.
FGExpansion fg_coefficients(const GeodesicCompactification& compact, int order);

// Series path alone (no cross-check); used internally and by tests.
std::vector<Sym3> fg_series_coefficients(const GeodesicCompactification& compact,
                                         int order);
// Grid-extraction path alone.
std::vector<Sym3> fg_grid_coefficients(const GeodesicCompactification& compact,
                                       int order);

// Per-block component series of g_t in the boundary orthonormal frame
// (unit normalization), one series per fiber block.
std::vector<PowerSeries> fg_block_series(const FamilyMetric& family);

struct TTReport {
  double trace_residual = 0.0;
  double divergence_residual = 0.0;
  // Divergence of a constant-coefficient form on a homogeneous boundary
  // vanishes identically; the report flags that this is structural, not a
  // numerical test.
  bool divergence_structural = true;
};
TTReport tt_check(const FGExpansion& expansion);

struct BoundaryIdentityReport {
  double sbar = 0.0;       // extrapolated boundary value of the compact scalar
  double ric_normal = 0.0; // Ric(N,N) at the boundary
  double s_gamma = 0.0;
  double res_normal_factor = 0.0;   // |sbar - 2(n-1) Ric(N,N)|
  double res_boundary_scalar = 0.0; // |sbar - ((n-1)/(n-2)) s_gamma|
  double res_mixed = 0.0;           // |Ric(N,X)|
  double res_tangential = 0.0;      // max |Ric^T - (2 Ric_g - s_g/4 g)|  (n=4)
};
BoundaryIdentityReport boundary_identities_check(
    const GeodesicCompactification& compact);

// max over the grid of | d(sbar)/dt - 2(n-1) t^-1 |Hess t|^2 |; also enforces
// that sbar is nondecreasing along the grid.  Grid values must lie inside the
// collar (below the width).
double scalar_monotonicity_profile(const GeodesicCompactification& compact,
                                   const std::vector<double>& t_grid);

struct WidthReport {
  double width = 0.0;
  double bound = 0.0;      // sqrt(3) pi / sqrt(s_o), +inf when s_o <= 0
  double alt_bound = 0.0;  // 6 / sqrt(s_o), +inf when s_o <= 0
  bool satisfied = true;
};
WidthReport width_and_bound(const GeodesicCompactification& compact);

}  // namespace ahe

#endif
