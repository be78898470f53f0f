#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/fan.hpp"
#include "syzkit/polytope.hpp"

using namespace syzkit;

TEST_CASE("build_cy_fan produces the rays (i,1)") {
  Fan2D f = build_cy_fan(2);
  REQUIRE(f.size() == 3);
  CHECK(f.ray(0) == LatticeVec(0, 1));
  CHECK(f.ray(1) == LatticeVec(1, 1));
  CHECK(f.ray(2) == LatticeVec(2, 1));
  CHECK_FALSE(f.complete());

  Fan2D single = build_cy_fan(0);  // C x C*
  CHECK(single.size() == 1);
  CHECK(single.ray(0) == LatticeVec(0, 1));

  Fan2D f5 = build_cy_fan(5);
  CHECK(f5.size() == 6);
  for (std::size_t i = 0; i + 1 < f5.size(); ++i) CHECK(f5.adjacent_determinant(i) == 1);
  CHECK(f5.is_smooth());

  CHECK_THROWS_AS(build_cy_fan(-1), std::invalid_argument);
}

TEST_CASE("is_calabi_yau finds the witness or rejects") {
  auto nu = is_calabi_yau(build_cy_fan(4));
  REQUIRE(nu.has_value());
  CHECK(*nu == LatticeVec(0, 1));

  Fan2D quadrant = Fan2D::make({LatticeVec(0, 1), LatticeVec(1, 0)}, false);
  auto nu2 = is_calabi_yau(quadrant);
  REQUIRE(nu2.has_value());
  CHECK(*nu2 == LatticeVec(1, 1));

  // Projective-plane analog: the forced witness pairs to -2 on (-1,-1).
  Fan2D p2 = Fan2D::make(sort_rays({LatticeVec(1, 0), LatticeVec(0, 1), LatticeVec(-1, -1)}, true), true);
  CHECK_FALSE(is_calabi_yau(p2).has_value());
}

TEST_CASE("classify normalizes onto Sigma_m") {
  // Already normalized: identity transform.
  for (int m = 0; m <= 12; ++m) {
    auto res = classify(build_cy_fan(m));
    REQUIRE(std::holds_alternative<Classification>(res));
    const auto& c = std::get<Classification>(res);
    CHECK(c.m == m);
    CHECK(c.transform == Mat2::identity());
  }

  // The quadrant fan is Sigma_1 in disguise.
  auto res = classify(Fan2D::make({LatticeVec(0, 1), LatticeVec(1, 0)}, false));
  REQUIRE(std::holds_alternative<Classification>(res));
  CHECK(std::get<Classification>(res).m == 1);

  // Swapped coordinates: rays (1,i).  The coordinate swap itself maps these
  // onto Sigma_2, and classify must return some unimodular witness doing the
  // same on the angularly sorted rays.
  std::vector<LatticeVec> rays{LatticeVec(1, 0), LatticeVec(1, 1), LatticeVec(1, 2)};
  Mat2 swap{0, 1, 1, 0};
  {
    std::vector<LatticeVec> swapped;
    for (const auto& r : sort_rays(rays, false)) swapped.push_back(swap.apply(r));
    std::sort(swapped.begin(), swapped.end(),
              [](const LatticeVec& a, const LatticeVec& b) { return a.x < b.x; });
    for (long i = 0; i <= 2; ++i) CHECK(swapped[i] == LatticeVec(i, 1));
  }
  auto res2 = classify(Fan2D::make(sort_rays(rays, false), false));
  REQUIRE(std::holds_alternative<Classification>(res2));
  const auto& c2 = std::get<Classification>(res2);
  CHECK(c2.m == 2);
  CHECK(c2.transform.is_unimodular());
  std::vector<LatticeVec> sorted = sort_rays(rays, false);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    CHECK(c2.transform.apply(sorted[i]) == LatticeVec(static_cast<long>(i), 1));

  // NotCY propagates.
  auto bad = classify(Fan2D::make(sort_rays({LatticeVec(1, 0), LatticeVec(0, 1), LatticeVec(-1, -1)}, true), true));
  REQUIRE(std::holds_alternative<ClassifyError>(bad));
  CHECK(std::get<ClassifyError>(bad) == ClassifyError::not_cy);
}

TEST_CASE("classify is invariant under random unimodular transforms") {
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 1 + static_cast<int>(rng() % 8);
    Mat2 a = oracles::random_gl2z(rng, 10);
    REQUIRE(a.is_unimodular());
    std::vector<LatticeVec> rays;
    for (int i = 0; i <= m; ++i) rays.push_back(a.apply(LatticeVec(i, 1)));
    Fan2D fan = Fan2D::make(sort_rays(rays, false), false);
    auto res = classify(fan);
    REQUIRE(std::holds_alternative<Classification>(res));
    CHECK(std::get<Classification>(res).m == m);
  }
}

TEST_CASE("self_intersection") {
  // Interior divisors of Sigma_m are (-2)-curves.
  for (int m = 2; m <= 12; ++m) {
    Fan2D f = build_cy_fan(m);
    for (std::size_t i = 1; i + 1 < f.size(); ++i) CHECK(self_intersection(f, i) == -2);
  }

  // On the compactification, D_1 of Sigma_2 keeps self-intersection -2.
  Fan2D bar = compactify(2, 1);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < bar.size(); ++i)
    if (bar.ray(i) == LatticeVec(1, 1)) idx = i;
  CHECK(self_intersection(bar, idx) == -2);

  // Degree-1 case: every divisor of the projective plane analog.
  Fan2D p2 = Fan2D::make(sort_rays({LatticeVec(1, 0), LatticeVec(0, 1), LatticeVec(-1, -1)}, true), true);
  for (std::size_t i = 0; i < 3; ++i) CHECK(self_intersection(p2, i) == 1);

  CHECK_THROWS_AS(self_intersection(build_cy_fan(3), 0), MathError);
  CHECK_THROWS_AS(self_intersection(build_cy_fan(3), 3), MathError);

  // Non-smooth neighbors: (1,0) + (-1,1) = (0,1) is not proportional to (1,1).
  Fan2D ugly = Fan2D::make(sort_rays({LatticeVec(-1, 1), LatticeVec(1, 1), LatticeVec(1, 0)}, false), false);
  CHECK_THROWS_AS(self_intersection(ugly, 1), MathError);
}

TEST_CASE("compactify is complete and smooth with a consistent h-class") {
  Fan2D bar = compactify(2, 1);
  CHECK(bar.size() == 6);
  CHECK(bar.complete());
  for (std::size_t i = 0; i < bar.size(); ++i) CHECK(bar.adjacent_determinant(i) == 1);

  // v_infinity = -v_l.
  Fan2D bar32 = compactify(3, 2);
  bool found = false;
  for (const auto& r : bar32.rays())
    if (r == LatticeVec(-2, -1)) found = true;
  CHECK(found);

  // Complete fans are never Calabi-Yau.
  CHECK_FALSE(is_calabi_yau(bar).has_value());

  CHECK_THROWS_AS(compactify(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(compactify(2, 0), std::invalid_argument);

  for (int m = 2; m <= 8; ++m) {
    for (int l = 1; l <= m - 1; ++l) {
      Fan2D f = compactify(m, l);
      CHECK(f.complete());
      CHECK(f.is_smooth());
      CHECK_FALSE(is_calabi_yau(f).has_value());

      // h . D_l = h . D_infty = 1, zero elsewhere.
      std::vector<mpz_class> targets(f.size(), 0);
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.ray(i) == LatticeVec(l, 1)) targets[i] = 1;
        if (f.ray(i) == LatticeVec(-l, -1)) targets[i] = 1;
      }
      CHECK(solve_curve_class(f, targets).has_value());
    }
  }
}

TEST_CASE("solve_curve_class checks the linear-equivalence relations") {
  Fan2D bar = compactify(2, 1);

  std::vector<mpz_class> targets(bar.size(), 0);
  for (std::size_t i = 0; i < bar.size(); ++i) {
    if (bar.ray(i) == LatticeVec(1, 1) || bar.ray(i) == LatticeVec(-1, -1)) targets[i] = 1;
  }
  auto h = solve_curve_class(bar, targets);
  REQUIRE(h.has_value());
  CHECK(h->pairings == targets);

  std::vector<mpz_class> zeros(bar.size(), 0);
  CHECK(solve_curve_class(bar, zeros).has_value());

  // D_1 alone fails the nu = (0,1) relation.
  std::vector<mpz_class> bad(bar.size(), 0);
  for (std::size_t i = 0; i < bar.size(); ++i)
    if (bar.ray(i) == LatticeVec(1, 1)) bad[i] = 1;
  CHECK_FALSE(solve_curve_class(bar, bad).has_value());
}

TEST_CASE("divisor linear equivalence") {
  Fan2D f = build_cy_fan(2);
  // sum <nu, v_j> D_j with nu = (1,0): coefficients (0,1,2).
  DivisorClass a{{mpz_class(0), mpz_class(1), mpz_class(2)}};
  DivisorClass zero{{mpz_class(0), mpz_class(0), mpz_class(0)}};
  CHECK(linearly_equivalent(f, a, zero));
  DivisorClass b{{mpz_class(0), mpz_class(1), mpz_class(3)}};
  CHECK_FALSE(linearly_equivalent(f, b, zero));
}

TEST_CASE("moment polytope vertices and edges") {
  // Cone case: single vertex at the origin.
  MomentPolytope cone = moment_polytope(1, {0.0, 0.0});
  REQUIRE(cone.vertices.size() == 1);
  CHECK(cone.vertices[0][0] == doctest::Approx(0.0));
  CHECK(cone.vertices[0][1] == doctest::Approx(0.0));

  MomentPolytope p = moment_polytope(2, {0.0, 0.0, -1.0});
  REQUIRE(p.vertices.size() == 2);
  CHECK(p.vertices[0][0] == doctest::Approx(-1.0));
  CHECK(p.vertices[0][1] == doctest::Approx(1.0));
  CHECK(p.vertices[1][0] == doctest::Approx(0.0));
  CHECK(p.vertices[1][1] == doctest::Approx(0.0));
  CHECK(p.edge_length(1) == doctest::Approx(1.0));

  // Brute-force oracle: pairwise facet intersections + feasibility filter.
  auto brute = oracles::polytope_vertices_brute(2, {0.0, 0.0, -1.0});
  REQUIRE(brute.size() == 2);
  std::vector<std::array<double, 2>> got = p.vertices;
  std::sort(got.begin(), got.end());
  for (std::size_t i = 0; i < brute.size(); ++i) {
    CHECK(got[i][0] == doctest::Approx(brute[i][0]));
    CHECK(got[i][1] == doctest::Approx(brute[i][1]));
  }

  CHECK_THROWS_AS(moment_polytope(2, {0.0, 0.0, 0.0}), MathError);  // middle facet redundant
  CHECK_THROWS_AS(moment_polytope(2, {0.0}), std::invalid_argument);
}

TEST_CASE("moment polytope against the brute-force oracle on random offsets") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> bump(0.1, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    int m = 2 + static_cast<int>(rng() % 5);
    // Strictly concave offsets guarantee all facets support.
    std::vector<double> c(m + 1, 0.0);
    std::vector<double> slope(m + 1, 0.0);
    for (int j = 1; j <= m; ++j) slope[j] = slope[j - 1] - bump(rng);
    for (int j = 1; j <= m; ++j) c[j] = c[j - 1] + slope[j];
    MomentPolytope p = moment_polytope(m, c);
    auto brute = oracles::polytope_vertices_brute(m, c);
    REQUIRE(p.vertices.size() == brute.size());
    std::vector<std::array<double, 2>> got = p.vertices;
    std::sort(got.begin(), got.end());
    for (std::size_t i = 0; i < brute.size(); ++i) {
      CHECK(got[i][0] == doctest::Approx(brute[i][0]));
      CHECK(got[i][1] == doctest::Approx(brute[i][1]));
    }
    // Vertices are active exactly on their two defining facets.
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
      int active = 0;
      for (int j = 0; j <= m; ++j) {
        double slack = j * p.vertices[vi][0] + p.vertices[vi][1] - c[j];
        CHECK(slack > -1e-9);
        if (std::abs(slack) < 1e-9) ++active;
      }
      CHECK(active == 2);
    }
    // q values land in (0,1).
    for (double q : p.kahler_q()) {
      CHECK(q > 0.0);
      CHECK(q < 1.0);
    }
  }
}

TEST_CASE("perturbing one offset moves only the adjacent vertices") {
  std::vector<double> c{0.0, 0.0, -1.0, -3.0};
  MomentPolytope base = moment_polytope(3, c);
  std::vector<double> c2 = c;
  c2[1] += 0.125;  // still concave
  MomentPolytope moved = moment_polytope(3, c2);
  // Vertices are ordered left-to-right = facet pairs (3,2), (2,1), (1,0):
  // offset c_1 enters vertices 1 and 2 only.
  CHECK(moved.vertices[0][0] == doctest::Approx(base.vertices[0][0]));
  CHECK(moved.vertices[0][1] == doctest::Approx(base.vertices[0][1]));
  CHECK(std::abs(moved.vertices[1][0] - base.vertices[1][0]) > 1e-6);
  CHECK(std::abs(moved.vertices[2][0] - base.vertices[2][0]) > 1e-6);
}
