#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ahe/black_holes.hpp"
#include "ahe/curvature.hpp"

using namespace ahe;
using std::numbers::pi;

TEST_CASE("make_black_hole: the three worked members") {
  BlackHoleSolution a = make_black_hole(4, 0.0, 0.5);
  CHECK(a.r_plus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.beta == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-12));

  BlackHoleSolution b = make_black_hole(4, +1.0, 1.0);
  CHECK(b.r_plus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.beta == doctest::Approx(pi).epsilon(1e-12));

  BlackHoleSolution c = make_black_hole(4, -1.0, 0.0);
  CHECK(c.r_plus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.beta == doctest::Approx(2.0 * pi).epsilon(1e-12));
}

TEST_CASE("horizon root and positivity invariants") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> mass(0.05, 4.0);
  for (int i = 0; i < 20; ++i) {
    double c = (i % 3 == 0) ? 1.0 : (i % 3 == 1 ? 0.0 : -1.0);
    double m = mass(rng);
    if (c < 0.0 && i % 2 == 0) m = -0.15;  // negative masses are admissible here
    BlackHoleSolution bh = make_black_hole(4, c, m);
    double V = c + bh.r_plus * bh.r_plus - 2.0 * m / bh.r_plus;
    CHECK(std::fabs(V) < 1e-12);
    for (double r = bh.r_plus * 1.0001; r < 30.0; r *= 1.4)
      CHECK(c + r * r - 2.0 * m / r > 0.0);
    // beta from the closed form equals the smoothness value
    CHECK(bh.beta == doctest::Approx(beta_of_rplus(c, bh.r_plus)).epsilon(1e-12));
  }
}

TEST_CASE("admissibility edges") {
  CHECK_THROWS_AS(make_black_hole(4, +1.0, -0.5), domain_error);
  CHECK_THROWS_AS(make_black_hole(4, +1.0, 0.0), domain_error);
  CHECK_THROWS_AS(make_black_hole(4, 0.0, -1.0), domain_error);
  CHECK_THROWS_AS(make_black_hole(4, -1.0, -0.2), domain_error);
  // m_o itself is excluded (double root)
  CHECK_THROWS_AS(make_black_hole(4, -1.0, -std::pow(3.0, -1.5)), domain_error);
}

TEST_CASE("beta_of_rplus closed forms") {
  CHECK(beta_of_rplus(+1.0, 1.0 / std::sqrt(3.0)) ==
        doctest::Approx(2.0 * pi / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(beta_of_rplus(0.0, 2.0) == doctest::Approx(2.0 * pi / 3.0).epsilon(1e-12));
  CHECK(beta_of_rplus(-1.0, 1.0) == doctest::Approx(2.0 * pi).epsilon(1e-14));
  CHECK_THROWS_AS(beta_of_rplus(-1.0, 0.5), domain_error);
  CHECK_THROWS_AS(beta_of_rplus(+1.0, 0.0), domain_error);
  // derivative against finite differences
  for (double r : {0.4, 0.9, 2.2}) {
    double h = 1e-6;
    double fd = (beta_of_rplus(+1.0, r + h) - beta_of_rplus(+1.0, r - h)) / (2 * h);
    CHECK(dbeta_drplus(+1.0, r) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("masses_for_beta: the worked cases") {
  auto set = masses_for_beta(+1.0, pi);
  REQUIRE(set.members.size() == 3);
  CHECK(set.members[0].m == doctest::Approx(5.0 / 27.0).epsilon(1e-12));
  CHECK(set.members[0].r_plus == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(set.members[1].m == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(set.members[2].kind == "hyperbolic_quotient");
  CHECK(set.members[2].topology == "R3xS1");

  auto ext = masses_for_beta(+1.0, 2.0 * pi / std::sqrt(3.0));
  int holes = 0;
  for (auto& c : ext.members)
    if (c.kind == "black_hole") {
      ++holes;
      CHECK(c.r_plus == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-7));
      CHECK(c.m == doctest::Approx(2.0 / std::pow(3.0, 1.5)).epsilon(1e-7));
    }
  CHECK(holes == 1);

  auto none = masses_for_beta(+1.0, 4.0);
  for (auto& c : none.members) CHECK(c.kind != "black_hole");
  CHECK(none.members.size() == 1);

  auto neg = masses_for_beta(-1.0, 2.0 * pi);
  REQUIRE(neg.members.size() == 1);
  CHECK(neg.members[0].m == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("beta round trip over each monotone branch") {
  for (double m : {0.1, 0.3, 2.0}) {
    BlackHoleSolution bh = make_black_hole(4, 0.0, m);
    auto set = masses_for_beta(0.0, bh.beta);
    REQUIRE(set.members.size() == 1);
    CHECK(set.members[0].m == doctest::Approx(m).epsilon(1e-10));
  }
  for (double m : {0.05, 1.0, 3.0}) {
    BlackHoleSolution bh = make_black_hole(4, +1.0, m);
    auto set = masses_for_beta(+1.0, bh.beta);
    bool found = false;
    for (auto& c : set.members)
      if (c.kind == "black_hole" && std::fabs(c.m - m) < 1e-10) found = true;
    CHECK(found);
  }
}

TEST_CASE("competitor conformal infinities match the query boundary") {
  for (double c : {1.0, 0.0, -1.0}) {
    for (double beta : {2.0, 3.0, 3.5}) {
      auto set = masses_for_beta(c, beta);
      for (const auto& member : set.members) {
        if (member.kind != "black_hole") continue;  // quotient: any beta
        BlackHoleSolution bh = make_black_hole(4, c, member.m);
        CHECK(std::fabs(bh.beta - beta) < 1e-8);
        BoundaryMetric3 inf = conformal_infinity(bh, {});
        CHECK(std::fabs(inf.volume() - set.boundary.volume()) < 1e-8);
        CHECK(std::fabs(inf.scalar_curvature() - set.boundary.scalar_curvature()) <
              1e-12);
      }
    }
  }
}

TEST_CASE("beta extremum and monotonicity certificates") {
  BetaExtremum e = beta_extremum(+1.0);
  CHECK(e.has_interior_max);
  CHECK(e.r_star == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
  CHECK(e.beta_star == doctest::Approx(2.0 * pi / std::sqrt(3.0)).epsilon(1e-9));

  BetaExtremum z = beta_extremum(0.0);
  CHECK_FALSE(z.has_interior_max);
  CHECK(z.monotone_sign == -1);

  BetaExtremum n = beta_extremum(-1.0);
  CHECK_FALSE(n.has_interior_max);
  CHECK(n.monotone_sign == -1);
}

TEST_CASE("m_o reproduced from r_plus = 1/sqrt(3)") {
  CHECK(mass_of_rplus(-1.0, 1.0 / std::sqrt(3.0)) ==
        doctest::Approx(-std::pow(3.0, -1.5)).epsilon(1e-12));
}

TEST_CASE("toral rescaling isometry") {
  CHECK(toral_rescaling_isometry(8.0).max_invariant_gap < 1e-9);
  CHECK(toral_rescaling_isometry(1.0).max_invariant_gap < 1e-13);
  // m = 1/2 and m = 2 both match g_1, so they match each other
  double gap_half = toral_rescaling_isometry(0.5).max_invariant_gap;
  double gap_two = toral_rescaling_isometry(2.0).max_invariant_gap;
  CHECK(gap_half + gap_two < 1e-9);
  CHECK_THROWS_AS(toral_rescaling_isometry(-1.0), domain_error);
}

TEST_CASE("conformal infinity of the families") {
  BlackHoleSolution schw = make_black_hole(4, +1.0, 1.0);
  BoundaryMetric3 b1 = conformal_infinity(schw, {});
  CHECK(b1.label() == BoundaryMetric3::circle_cross_sphere(pi).label());
  CHECK(b1.volume() == doctest::Approx(pi * 4.0 * pi).epsilon(1e-12));

  BlackHoleSolution gen = make_black_hole(4, -1.0, 0.0, 2);
  BoundaryMetric3 b2 = conformal_infinity(gen, {});
  CHECK(b2.scalar_curvature() == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(b2.volume() == doctest::Approx(2.0 * pi * 4.0 * pi).epsilon(1e-12));

  BlackHoleSolution tor = make_black_hole(4, 0.0, 1.0);
  BoundaryMetric3 b3 = conformal_infinity(tor, {1.0, 1.0});
  CHECK(b3.scalar_curvature() == 0.0);
  CHECK(b3.volume() == doctest::Approx(tor.beta).epsilon(1e-12));
  CHECK_THROWS_AS(conformal_infinity(tor, {2.0, 1.0}), type_error);
  CHECK_THROWS_AS(conformal_infinity(schw, {1.0}), type_error);
}

TEST_CASE("materialized ansatz is Einstein") {
  for (double c : {1.0, 0.0, -1.0}) {
    BlackHoleSolution bh = make_black_hole(4, c, c < -0.5 ? -0.1 : 0.7);
    std::vector<double> grid;
    for (int i = 1; i <= 30; ++i) grid.push_back(bh.r_plus + 0.15 * i * i);
    CHECK(einstein_residual(bh.family.metric, grid) < 1e-8);
  }
}
