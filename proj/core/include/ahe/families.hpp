#ifndef AHE_FAMILIES_HPP
#define AHE_FAMILIES_HPP

#include <limits>
#include <string>
#include <vector>

#include "ahe/boundary.hpp"
#include "ahe/series.hpp"
#include "ahe/warped_metric.hpp"

namespace ahe {

// A catalog member: the materialized warped-product metric together with its
// declared conformal infinity, horizon data, topology label and asymptotic
// data for the series pipelines.
//
// Two asymptotic shapes occur.  Black-hole type families carry
// u^2 V(1/u) = P(u) and the geodesic defining function is built by
// quadrature; exponential-warp families (cusp, hyperbolic quotient) have
// t = exp_factor * e^{-r} exactly and carry their g_t component series
// explicitly.
struct FamilyMetric {
  WarpedProductMetric metric;
  BoundaryMetric3 boundary;
  double horizon = 0.0;  // inner end of the interval (r+, or 0, or -inf)
  double beta = std::numeric_limits<double>::quiet_NaN();  // theta period if present
  double mass = 0.0;
  double c = 0.0;  // horizon curvature sign for the black-hole families
  int chi = 0;     // Euler characteristic, supplied by the topology label
  std::string topology;
  PowerSeries P;                  // u^2 V(1/u); empty for exponential families
  std::vector<bool> theta_block;  // per block: warp sqrt(V) (true) or r (false)
  double exp_factor = 0.0;        // > 0: t = scale * exp_factor * e^{-r}
  std::vector<PowerSeries> component_series;  // g_t per block, unit normalization

  bool exponential() const { return exp_factor > 0.0; }
};

// V(r) = c + r^2 - 2m / r^(n-3), largest root by bracketing + Brent.
double solve_r_plus(int n, double c, double m);

// Smooth-closure period 4*pi / V'(r+), any dimension.
double beta_smooth(int n, double c, double m, double r_plus);

// Admissible mass range for (n, c); throws domain_error outside it.
void check_admissible(int n, double c, double m);

FamilyMetric hyperbolic_ball();
FamilyMetric ads_schwarzschild(double m);                        // c = +1
FamilyMetric higher_genus_black_hole(double m, int genus = 2);   // c = -1
FamilyMetric toral_black_hole(double m, const Gram2& gram = {}); // c = 0
FamilyMetric cusp_metric(const Gram3& gram);
FamilyMetric hyperbolic_quotient(double beta);  // H^4/Z, translation length beta
FamilyMetric black_hole_dim5(double m);         // n = 5, c = +1

// n = 4 dispatcher used by the CLI.
FamilyMetric make_family(double c, double m, int genus = 2, const Gram2& gram = {});

// The fixed verification catalog (all n = 4, homogeneous 3d boundaries).
std::vector<FamilyMetric> standard_catalog();

}  // namespace ahe

#endif
