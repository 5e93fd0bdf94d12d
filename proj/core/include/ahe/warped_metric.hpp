#ifndef AHE_WARPED_METRIC_HPP
#define AHE_WARPED_METRIC_HPP

#include <limits>
#include <string>
#include <vector>

#include "ahe/fiber.hpp"
#include "ahe/jet.hpp"

namespace ahe {

// Cohomogeneity-one metric
//   g = f_r(x)^2 dx^2 + sum_i f_i(x)^2 sigma_i^2
// on (a,b) x fiber, the carrier for every explicit metric in the toolkit.
// Warp factors are jets so all curvature derivatives are analytic.
struct WarpedProductMetric {
  double x_min = 0.0;
  double x_max = std::numeric_limits<double>::infinity();
  RadialFn radial_factor;                // f_r
  std::vector<RadialFn> warp_factors;    // one per fiber block
  FiberDescriptor fiber;
  int dimension = 4;
  std::string name;

  bool contains(double x) const { return x > x_min && x < x_max; }

  void validate_at(double x) const {
    if (!contains(x)) throw domain_error("coordinate outside the open interval");
    if (warp_factors.size() != fiber.blocks.size())
      throw type_error("warp factor count does not match fiber blocks");
    if (1 + fiber.dim() != dimension)
      throw invalid_metric_error("dimension != 1 + fiber dimension");
  }
};

}  // namespace ahe

#endif
