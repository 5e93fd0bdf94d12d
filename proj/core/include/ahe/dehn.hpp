#ifndef AHE_DEHN_HPP
#define AHE_DEHN_HPP

#include <utility>
#include <vector>

#include "ahe/linalg.hpp"

namespace ahe {

struct FlatTorus2 {
  Gram2 gram;
  double area() const { return std::sqrt(gram.det()); }
};

struct SigmaClass {
  long long p = 1;
  long long q = 0;
};

// All primitive classes with length <= L_max, canonical representatives
// (p > 0, or p = 0 and q > 0), sorted by length then lexicographically.
std::vector<std::pair<SigmaClass, double>> primitive_geodesics(
    const FlatTorus2& torus, double L_max);

// A solid-torus filling: hyperbolic tube (3d) or toral black hole (4d),
// matched to close the meridian sigma with the prescribed flat conformal
// infinity.  The Z-action on the boundary cylinder is stored as the
// (rotation, translation) pair; the quotient chart is never materialized.
struct DehnFilling {
  int dimension = 3;
  FlatTorus2 base_torus;
  SigmaClass sigma;
  double L = 0.0;            // length of sigma in (T^2, g_o)
  double R = 0.0;            // tube radius (3d) / matched coordinate radius (4d)
  double core_length = 0.0;
  double ortho_height = 0.0;  // h = area / L, translation of the Z-generator
  double twist = 0.0;         // rotation angle of the Z-generator on the meridian
  double beta2 = 0.0;         // 4d only: period of the second torus circle
  double mass = 0.0;          // 4d only: fixed m = 1
  bool cusp_flag = false;     // flags the near-cusp regime (tiny core)
};

DehnFilling fill_3d(const FlatTorus2& torus, const SigmaClass& sigma);
DehnFilling fill_4d(const FlatTorus2& torus, const SigmaClass& sigma, double beta2);

// sup over the window of the boundary-frame component difference between the
// filling metric and the cusp model in matched geodesic coordinates.  The
// window is clipped to the attained range of the filling's defining function;
// a window entirely outside the collar is a domain error.
double cusp_limit_distance(const DehnFilling& filling,
                           std::pair<double, double> t_window);

// Gram matrix of the lattice basis (sigma, tau) in g_o, where tau is the
// complementary generator carried by the Z-action; reconstructing the same
// Gram from the filling data is the conformal-infinity identity of the
// constructions.
Gram2 sigma_tau_gram(const FlatTorus2& torus, const SigmaClass& sigma);
Gram2 boundary_gram_from_filling(const DehnFilling& filling);

}  // namespace ahe

#endif
