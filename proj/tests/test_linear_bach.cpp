#include <doctest.h>

#include <random>

#include "ahe/linear_bach.hpp"

using namespace ahe;

namespace {

InvariantForm diag_form(int a, int b, int c, int d, int degree) {
  InvariantForm h;
  h.set(0, 0, RatPoly::monomial(Rational(a), degree));
  h.set(1, 1, RatPoly::monomial(Rational(b), degree));
  h.set(2, 2, RatPoly::monomial(Rational(c), degree));
  h.set(3, 3, RatPoly::monomial(Rational(d), degree));
  return h;
}

RatMat4 random_gauge_block(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-7, 7);
  RatMat4 m{};
  int d2 = num(rng), d3 = num(rng);
  m[1][1] = Rational(d2);
  m[2][2] = Rational(d3);
  m[3][3] = Rational(-d2 - d3);
  m[1][2] = m[2][1] = Rational(num(rng));
  m[1][3] = m[3][1] = Rational(num(rng));
  m[2][3] = m[3][2] = Rational(num(rng));
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), numerical_error);
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(1, -2).num() == -1);
}

TEST_CASE("gauge residuals of the worked forms") {
  // h = t^2 diag(0, 1, -1, 0): tr h = 0 and h_11 = 0, both residuals vanish
  GaugeResidual g1 = gauge_check(diag_form(0, 1, -1, 0, 2));
  CHECK(g1.holds());

  // h = t^2 diag(1, 0, 0, 0): residual 2t - t = t
  GaugeResidual g2 = gauge_check(diag_form(1, 0, 0, 0, 2));
  CHECK_FALSE(g2.holds());
  CHECK(g2.diag == RatPoly::monomial(Rational(1), 1));
  CHECK(g2.mixed[0].is_zero());

  // constant forms are always in gauge
  CHECK(gauge_check(diag_form(3, -2, 5, 7, 0)).holds());
}

TEST_CASE("linearized operators") {
  // constant + linear: flat deformation, ric' = 0
  std::mt19937 rng(3);
  SolutionBlocks b;
  b.A1 = random_gauge_block(rng);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) b.A0[i][j] = b.A0[j][i] = Rational((i + 1) * (j + 2));
  LinearizedOps flat = linearized_operators(general_solution(b));
  CHECK(flat.ric_prime.is_zero());
  CHECK(flat.s_prime.is_zero());

  // tr h = (c0/4) t^4 gives s' = -(3/2) c0 t^2
  SolutionBlocks bc;
  bc.c0 = Rational(4);
  LinearizedOps quartic = linearized_operators(general_solution(bc));
  CHECK(quartic.s_prime == RatPoly::monomial(Rational(-6), 2));

  // h = t^2 diag(0,1,-1,0): s' = 0, ric' = -diag(0,1,-1,0)
  LinearizedOps tt = linearized_operators(diag_form(0, 1, -1, 0, 2));
  CHECK(tt.s_prime.is_zero());
  CHECK(tt.ric_prime.comp[1][1] == RatPoly::constant(Rational(-1)));
  CHECK(tt.ric_prime.comp[2][2] == RatPoly::constant(Rational(1)));
  CHECK(tt.ric_prime.comp[0][0].is_zero());

  // a trace term outside the (5.27) form trips the route comparison
  CHECK_THROWS_AS(linearized_operators(diag_form(1, 1, 1, 1, 2)),
                  consistency_error);
}

TEST_CASE("bach residual: zero, the quartic family, and degree 5") {
  CHECK(bach_residual(InvariantForm::zero()).is_zero());

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int draw = 0; draw < 100; ++draw) {
    SolutionBlocks b;
    b.c0 = Rational(num(rng));
    b.c1 = Rational(num(rng));
    b.C2 = random_gauge_block(rng);
    b.C3 = random_gauge_block(rng);
    b.A1 = random_gauge_block(rng);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) b.A0[i][j] = b.A0[j][i] = Rational(num(rng));
    InvariantForm h = general_solution(b);
    CHECK(bach_residual(h).is_zero());
    CHECK(gauge_check(h).holds());
  }

  // degree-5 perturbations: (D*D)^2 t^5 = 120 t does not match the RHS
  InvariantForm h5;
  h5.set(1, 2, RatPoly::monomial(Rational(1), 5));
  InvariantForm r5 = bach_residual(h5);
  CHECK_FALSE(r5.is_zero());
  CHECK(r5.comp[1][2] == RatPoly::monomial(Rational(120), 1));

  InvariantForm h5d = diag_form(0, 1, -1, 0, 5);
  CHECK_FALSE(bach_residual(h5d).is_zero());
}

TEST_CASE("general solution: normal form and named constraint violations") {
  SolutionBlocks b;
  b.c0 = Rational(24);
  InvariantForm h = general_solution(b);
  CHECK(h.comp[0][0] == RatPoly::monomial(Rational(3), 4));
  CHECK(h.comp[1][1] == RatPoly::monomial(Rational(1), 4));
  CHECK(h.trace() == RatPoly::monomial(Rational(6), 4));  // (c0/4) t^4

  SolutionBlocks bad1;
  bad1.C2[1][1] = Rational(1);  // nonzero trace
  CHECK_THROWS_WITH_AS(general_solution(bad1), "C2 must be traceless",
                       domain_error);

  SolutionBlocks bad2;
  bad2.C3[0][1] = bad2.C3[1][0] = Rational(1);
  CHECK_THROWS_WITH_AS(general_solution(bad2),
                       "C3 must have vanishing (1,i) entries, i >= 2",
                       domain_error);

  SolutionBlocks bad3;
  bad3.A1[1][2] = Rational(1);  // not symmetric
  CHECK_THROWS_WITH_AS(general_solution(bad3), "A1 must be symmetric",
                       domain_error);
}

TEST_CASE("degree >= 2 admissible forms generate curvature") {
  std::mt19937 rng(5);
  for (int draw = 0; draw < 20; ++draw) {
    SolutionBlocks b;
    b.C2 = random_gauge_block(rng);
    b.C3 = random_gauge_block(rng);
    b.c0 = Rational(1 + (draw % 5));
    InvariantForm h = general_solution(b);
    bool c2_zero = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!b.C2[i][j].is_zero()) c2_zero = false;
    if (!c2_zero) CHECK_FALSE(linearized_operators(h).ric_prime.is_zero());
  }
}

TEST_CASE("kernel dimensions: parameterization matches the brute force") {
  KernelReport k = kernel_dimensions();
  CHECK(k.parameter_dimension == k.brute_force_dimension);
  CHECK(k.brute_force_dimension == 26);
  // dropping the trace consistency enlarges the kernel by the three traces
  CHECK(k.gauge_bach_only_dimension == 29);
}
