#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "ahe/dehn.hpp"

using namespace ahe;
using std::numbers::pi;

namespace {
const FlatTorus2 kSquare{Gram2{1.0, 0.0, 1.0}};
}

TEST_CASE("primitive geodesics on the unit square") {
  auto g = primitive_geodesics(kSquare, 1.5);
  REQUIRE(g.size() == 4);
  CHECK(g[0].first.p == 0);
  CHECK(g[0].first.q == 1);
  CHECK(g[0].second == doctest::Approx(1.0));
  CHECK(g[1].first.p == 1);
  CHECK(g[1].first.q == 0);
  CHECK(g[2].second == doctest::Approx(std::sqrt(2.0)));
  CHECK(g[3].second == doctest::Approx(std::sqrt(2.0)));

  auto g2 = primitive_geodesics(kSquare, 2.5);
  REQUIRE(g2.size() == 8);
  for (std::size_t i = 4; i < 8; ++i)
    CHECK(g2[i].second == doctest::Approx(std::sqrt(5.0)));

  FlatTorus2 tall{Gram2{4.0, 0.0, 1.0}};
  auto g3 = primitive_geodesics(tall, 1.5);
  REQUIRE(g3.size() == 1);
  CHECK(g3[0].first.p == 0);
  CHECK(g3[0].first.q == 1);

  CHECK(primitive_geodesics(kSquare, 0.5).empty());
}

TEST_CASE("3d filling: closed-form values") {
  DehnFilling f = fill_3d(kSquare, {1, 0});
  CHECK(f.L == doctest::Approx(1.0));
  CHECK(f.R == doctest::Approx(std::asinh(1.0 / (2.0 * pi))).epsilon(1e-12));
  CHECK(f.ortho_height == doctest::Approx(1.0));
  double core_expect = 1.0 / std::sqrt(1.0 + 1.0 / (4.0 * pi * pi));
  CHECK(f.core_length == doctest::Approx(core_expect).epsilon(1e-12));
  CHECK(std::fabs(2.0 * pi * std::sinh(f.R) - f.L) < 1e-12);

  DehnFilling f5 = fill_3d(kSquare, {5, 1});
  CHECK(f5.L == doctest::Approx(std::sqrt(26.0)));
  CHECK(f5.R == doctest::Approx(std::asinh(std::sqrt(26.0) / (2.0 * pi))).epsilon(1e-12));
  double core5 = (1.0 / std::sqrt(26.0)) / std::sqrt(1.0 + 26.0 / (4.0 * pi * pi));
  CHECK(f5.core_length == doctest::Approx(core5).epsilon(1e-12));

  CHECK_THROWS_AS(fill_3d(kSquare, {2, 2}), domain_error);
  CHECK_THROWS_AS(fill_3d(kSquare, {0, 0}), domain_error);
}

TEST_CASE("3d core lengths decrease along (k,1)") {
  double prev = 1e300;
  for (long long k = 1; k <= 20; ++k) {
    DehnFilling f = fill_3d(kSquare, {k, 1});
    CHECK(f.core_length < prev);
    prev = f.core_length;
    // bounded product, consistent with the O(1/sinh R) rate
    CHECK(f.core_length * std::sinh(f.R) <= kSquare.area() / (2.0 * pi) + 1e-12);
  }
}

TEST_CASE("4d filling: matched radius from the cubic") {
  DehnFilling f = fill_4d(kSquare, {1, 0}, 1.0);
  double beta = 4.0 * pi / (3.0 * std::cbrt(2.0));
  CHECK(beta == doctest::Approx(3.3246449888).epsilon(1e-9));
  double target = (f.L / beta) * (f.L / beta);
  CHECK(target == doctest::Approx(0.090478).epsilon(1e-4));
  // R solves R^3 - target R - 2 = 0
  CHECK(std::fabs(f.R * f.R * f.R - target * f.R - 2.0) < 1e-12);
  CHECK(f.R == doctest::Approx(1.2843).epsilon(1e-3));
  double V = f.R * f.R - 2.0 / f.R;
  CHECK(std::fabs(std::sqrt(V) * beta - f.L) < 1e-12);
  CHECK(f.mass == 1.0);
}

TEST_CASE("4d cores decrease and cusp distances decrease along (k,1)") {
  double prev_core = 1e300;
  for (long long k = 1; k <= 20; ++k) {
    DehnFilling f = fill_4d(kSquare, {k, 1}, 1.0);
    CHECK(f.core_length < prev_core);
    prev_core = f.core_length;
    double V = f.R * f.R - 2.0 / f.R;
    CHECK(f.core_length * std::sqrt(V) <= kSquare.area() + 1e-12);
  }
  double d3 = cusp_limit_distance(fill_4d(kSquare, {3, 1}, 1.0), {1.0, 2.0});
  double d10 = cusp_limit_distance(fill_4d(kSquare, {10, 1}, 1.0), {1.0, 2.0});
  CHECK(d10 < d3);
}

TEST_CASE("cusp limit distance: tube against the cusp") {
  // L = 100 on a window near the boundary: the tube is 1e-2 close to the cusp
  FlatTorus2 big{Gram2{10000.0, 0.0, 1.0}};  // (1,0) has length 100
  DehnFilling f = fill_3d(big, {1, 0});
  CHECK(cusp_limit_distance(f, {0.0, 1.0}) < 1e-2);
  // in the far limit the distance vanishes (the cusp against itself)
  FlatTorus2 huge{Gram2{1e12, 0.0, 1.0}};
  DehnFilling fh = fill_3d(huge, {1, 0});
  CHECK(cusp_limit_distance(fh, {0.0, 1.0}) < 5e-11);

  CHECK_THROWS_AS(cusp_limit_distance(fill_4d(kSquare, {1, 1}, 1.0), {5.0, 6.0}),
                  domain_error);
  CHECK_THROWS_AS(cusp_limit_distance(f, {3.0, 1.0}), domain_error);
}

TEST_CASE("conformal infinity of the fillings equals the prescribed torus") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> entry(0.5, 2.0);
  for (int i = 0; i < 10; ++i) {
    Gram2 g{entry(rng), 0.0, entry(rng)};
    g.b = 0.3 * std::min(g.a, g.c) * (i % 2 ? 1 : -1);
    FlatTorus2 torus{g};
    SigmaClass s{1 + (i % 4), 1};
    Gram2 want = sigma_tau_gram(torus, s);
    for (int dim : {3, 4}) {
      DehnFilling f = dim == 3 ? fill_3d(torus, s) : fill_4d(torus, s, 1.3);
      Gram2 got = boundary_gram_from_filling(f);
      CHECK(std::fabs(got.a - want.a) < 1e-8);
      CHECK(std::fabs(got.b - want.b) < 1e-8);
      CHECK(std::fabs(got.c - want.c) < 1e-8);
      // same lattice: same area
      CHECK(std::sqrt(want.det()) == doctest::Approx(torus.area()).epsilon(1e-10));
    }
  }
}

TEST_CASE("isometry classification on the square lattice") {
  // distinct primitive classes up to L <= 4 have distinct cores except on
  // the symmetry orbits of the square lattice
  auto classes = primitive_geodesics(kSquare, 4.0);
  std::map<long long, std::vector<SigmaClass>> by_core;
  for (const auto& [s, L] : classes) {
    DehnFilling f = fill_3d(kSquare, s);
    by_core[llround(f.core_length * 1e12)].push_back(s);
  }
  for (const auto& [core, group] : by_core) {
    // all classes sharing a core must share the norm (orbit under the
    // square-lattice isometries)
    double L0 = kSquare.gram.norm2(group[0].p, group[0].q);
    for (const auto& s : group)
      CHECK(kSquare.gram.norm2(s.p, s.q) == doctest::Approx(L0).epsilon(1e-12));
  }
  // the first equal-norm pair in distinct orbits, (8,1) and (7,4), is
  // separated by the twist of the Z-generator
  DehnFilling f81 = fill_3d(kSquare, {8, 1});
  DehnFilling f74 = fill_3d(kSquare, {7, 4});
  CHECK(f81.core_length == doctest::Approx(f74.core_length).epsilon(1e-12));
  CHECK(std::fabs(f81.twist - f74.twist) > 1e-3);
}

TEST_CASE("cusp flag marks the near-cusp regime") {
  CHECK_FALSE(fill_3d(kSquare, {1, 0}).cusp_flag);
  CHECK(fill_3d(kSquare, {200, 1}).cusp_flag);
}
