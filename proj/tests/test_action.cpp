#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ahe/action.hpp"

using namespace ahe;
using std::numbers::pi;

TEST_CASE("hyperbolic ball volume expansion") {
  FamilyMetric ball = hyperbolic_ball();
  GeodesicCompactification comp(ball, ball.boundary);
  VolumeExpansion v = volume_expansion_fit(comp);
  // vol S = 2 pi^2 sinh^3(rho): v0 = pi^2/4, v2 = -3 pi^2/4, V = 4 pi^2/3
  CHECK(v.v0 == doctest::Approx(pi * pi / 4.0).epsilon(1e-12));
  CHECK(v.v2 == doctest::Approx(-3.0 * pi * pi / 4.0).epsilon(1e-12));
  CHECK(v.V_ren == doctest::Approx(4.0 * pi * pi / 3.0).epsilon(1e-6));
  // v2 = -3 v0 exactly for the sinh^3 expansion
  CHECK(std::fabs(v.v2 + 3.0 * v.v0) < 1e-12);
  CHECK(std::fabs(v.spurious_e2r) < 1e-7);
  CHECK(std::fabs(v.spurious_linear) < 1e-6);
}

TEST_CASE("flat cusp volume expansion") {
  Gram3 unit;
  FamilyMetric cusp = cusp_metric(unit);
  GeodesicCompactification comp(cusp, cusp.boundary);
  VolumeExpansion v = volume_expansion_fit(comp);
  CHECK(v.v0 == doctest::Approx(1.0 / 8.0).epsilon(1e-12));  // vol(T3)/8
  CHECK(std::fabs(v.v2) < 1e-12);
  CHECK(std::fabs(v.V_ren) < 1e-7);
}

TEST_CASE("window stability and the closed-form oracle") {
  for (const auto& fam : standard_catalog()) {
    GeodesicCompactification comp(fam, fam.boundary);
    double v1 = volume_expansion_fit(comp, 0).V_ren;
    double v2 = volume_expansion_fit(comp, 1).V_ren;  // doubled window
    CHECK(std::fabs(v1 - v2) < 1e-4 * std::max(1.0, std::fabs(v1)));
    double closed = renormalized_volume_closed_form(fam);
    CHECK(std::fabs(v1 - closed) < 1e-5 * std::max(1.0, std::fabs(closed)));
  }
}

TEST_CASE("AdS-Schwarzschild m=1 volume via window doubling") {
  FamilyMetric schw = ads_schwarzschild(1.0);
  GeodesicCompactification comp(schw, schw.boundary);
  double v1 = volume_expansion_fit(comp, 0).V_ren;
  double v2 = volume_expansion_fit(comp, 1).V_ren;
  CHECK(std::fabs(v1 - v2) < 1e-4);
  // m = r_plus^3 = 1 makes the closed form vanish
  CHECK(std::fabs(v1) < 5e-6);
  // a nontrivial member against the closed form
  FamilyMetric schw2 = ads_schwarzschild(2.0);
  GeodesicCompactification comp2(schw2, schw2.boundary);
  double vn = volume_expansion_fit(comp2).V_ren;
  CHECK(vn == doctest::Approx(renormalized_volume_closed_form(schw2)).epsilon(1e-6));
}

TEST_CASE("Gauss-Bonnet-Weyl identity") {
  GaussBonnetReport ball = gauss_bonnet_weyl_check(hyperbolic_ball(), 1);
  CHECK(std::fabs(ball.lhs) < 1e-9);
  CHECK(std::fabs(ball.rhs) < 1e-6);

  GaussBonnetReport schw = gauss_bonnet_weyl_check(ads_schwarzschild(1.0), 2);
  CHECK(schw.relative_gap < 1e-3);

  GaussBonnetReport tor = gauss_bonnet_weyl_check(toral_black_hole(1.0), 0);
  CHECK(tor.relative_gap < 1e-3);
  // chi = 0 turns the identity into V_ren = -(1/6) of the Lambda^2 energy
  CHECK(tor.V_ren ==
        doctest::Approx(-(tor.weyl_energy_full / 4.0) / 6.0).epsilon(1e-6));

  GaussBonnetReport gen = gauss_bonnet_weyl_check(higher_genus_black_hole(1.0), -2);
  CHECK(gen.relative_gap < 1e-3);
}

TEST_CASE("volume bound from the identity") {
  for (const auto& fam : standard_catalog()) {
    GeodesicCompactification comp(fam, fam.boundary);
    double vren = volume_expansion_fit(comp).V_ren;
    CHECK(vren <= 4.0 * pi * pi / 3.0 * fam.chi + 1e-6);
  }
}

TEST_CASE("variation formula: frozen family is trivial") {
  ToralFamily frozen;
  frozen.frozen = true;
  frozen.frozen_m = 1.0;
  VariationReport v = dv_variation_check(frozen, 1.0, 1e-3);
  CHECK(std::fabs(v.finite_difference) < 1e-10);
  CHECK(std::fabs(v.boundary_integral) < 1e-14);
}

TEST_CASE("variation formula: toral family") {
  ToralFamily fam;
  for (double m : {1.0, 0.5}) {
    VariationReport v = dv_variation_check(fam, m, 1e-3);
    CHECK(v.relative_gap < 1e-2);
    // analytic slope of V_ren(m) = -(beta(m) A / 3) m with A = 1
    double rp = std::cbrt(2.0 * m);
    double expect = -8.0 * pi / (27.0 * rp);
    CHECK(v.finite_difference == doctest::Approx(expect).epsilon(1e-3));
    CHECK(v.boundary_integral == doctest::Approx(expect).epsilon(1e-3));
  }
}

TEST_CASE("variation formula: invalid steps") {
  ToralFamily fam;
  CHECK_THROWS_AS(dv_variation_check(fam, 1.0, 0.0), domain_error);
  CHECK_THROWS_AS(dv_variation_check(fam, 1.0, 1.5), domain_error);
}
