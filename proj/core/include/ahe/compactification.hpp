#ifndef AHE_COMPACTIFICATION_HPP
#define AHE_COMPACTIFICATION_HPP

#include <vector>

#include "ahe/families.hpp"
#include "ahe/jet.hpp"

namespace ahe {

// Geodesic compactification gbar = t^2 g of a catalog metric, with the
// geodesic defining function t(r) = C exp(-int f_r dr) built by quadrature.
// C is fixed so that t * f_i -> scale for every warp factor, i.e. t^2 g
// induces `scale^2 *` the declared boundary representative (scale = 1 is the
// unit normalization used throughout the catalog).
class GeodesicCompactification {
 public:
  GeodesicCompactification(const FamilyMetric& family,
                           const BoundaryMetric3& boundary, double scale = 1.0);

  const FamilyMetric& family() const { return family_; }
  const BoundaryMetric3& boundary() const { return boundary_; }
  double scale() const { return scale_; }

  // sup of t over the closed manifold (t at the horizon/center); +inf for
  // the cusp.
  double width() const { return width_; }

  double t_of_r(double r) const;
  double r_of_t(double t) const;  // throws domain_error for t >= width
  Jet t_jet(double r) const;      // geodesic defining function as a jet in r

  // Diagonal frame components of g_t in the boundary orthonormal frame,
  // one entry per fiber block of the source metric.
  std::vector<double> gt_block_components(double t) const;

  // Compactified metric tbar^2 g as a warped product in the r coordinate.
  WarpedProductMetric compactified_metric() const;

  // Number of boundary-frame slots and the block index of each slot.
  const std::vector<int>& frame_slots() const { return frame_slots_; }

 private:
  double asymptotic_tail(double u) const;  // series tail of I at u = 1/R
  double I_of(double r) const;             // int_r^inf (f_r - 1/s) ds
  double log_t_deep(double r) const;       // log t for r below r_ref

  FamilyMetric family_;
  BoundaryMetric3 boundary_;
  double scale_ = 1.0;
  double r_ref_ = 0.0;
  double log_t_ref_ = 0.0;
  double width_ = 0.0;
  double r_far_ = 50.0;
  PowerSeries tail_series_;  // I(u) as series in u = 1/r
  std::vector<int> frame_slots_;
};

GeodesicCompactification geodesic_compactification(const FamilyMetric& family,
                                                   const BoundaryMetric3& boundary,
                                                   double scale = 1.0);

}  // namespace ahe

#endif
