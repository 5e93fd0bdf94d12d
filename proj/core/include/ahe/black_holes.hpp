#ifndef AHE_BLACK_HOLES_HPP
#define AHE_BLACK_HOLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ahe/families.hpp"

namespace ahe {

// A member of the c in {+1, 0, -1} families with derived horizon and period.
// The mass is the primary parameter; r_plus and beta are always derived.
struct BlackHoleSolution {
  int dimension = 4;
  double c = 1.0;
  double m = 1.0;
  double r_plus = 1.0;
  double beta = 1.0;
  FamilyMetric family;  // materialized ansatz
};

BlackHoleSolution make_black_hole(int n, double c, double m, int genus = 2,
                                  const Gram2& gram = {});

// Smooth-closure period as a function of r_plus, n = 4 closed forms
// 4 pi r / (c + 3 r^2); c = -1 requires r_plus > 1/sqrt(3).
double beta_of_rplus(double c, double r_plus);
double dbeta_drplus(double c, double r_plus);

// mass from horizon radius: m = r(c + r^2)/2.
double mass_of_rplus(double c, double r_plus);

// Extension point: the AdS Taub-Bolt metrics on line bundles over S^2 form a
// further class of spherical-infinity competitors; a new `kind` here plus a
// family constructor would slot them in.  Not represented in this catalog.
struct Competitor {
  std::string kind;      // "black_hole" or "hyperbolic_quotient"
  std::string topology;  // S2xR2, R2xSigma_g, R2xT2, R3xS1
  double m = 0.0;
  double r_plus = 0.0;
  std::optional<double> renormalized_volume;
  std::optional<double> twist_alpha;  // quotient only; opaque label, no metric
};

struct CompetitorSet {
  BoundaryMetric3 boundary;
  std::vector<Competitor> members;  // ordered by mass, quotient last
};

// All fillings with conformal infinity S^1(beta) x fiber: the black-hole
// branches (roots of beta_of_rplus = beta) plus, for c = +1, the hyperbolic
// quotient which exists for every beta.  An empty black-hole branch list is a
// valid result.
CompetitorSet masses_for_beta(double c, double beta);

struct BetaExtremum {
  bool has_interior_max = false;
  double r_star = 0.0;
  double beta_star = 0.0;
  int monotone_sign = 0;  // sign of dbeta/dr_plus on the admissible domain
};
BetaExtremum beta_extremum(double c);

struct RescalingReport {
  double max_invariant_gap = 0.0;  // worst |invariant(g_m) - invariant(g_1)|
  int samples = 0;
};
// Verifies that r = m^{1/3} s matches all curvature invariants of g_m against
// g_1 at the corresponding points (the c = 0 cover isometry).
RescalingReport toral_rescaling_isometry(double m, int samples = 20);

// Boundary representative induced by the unit geodesic compactification.
// fiber_periods: for c = 0 the two torus periods (must match the descriptor);
// empty otherwise.
BoundaryMetric3 conformal_infinity(const BlackHoleSolution& bh,
                                   const std::vector<double>& fiber_periods);

}  // namespace ahe

#endif
