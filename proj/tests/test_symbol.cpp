#include "fixtures.hpp"
#include "oracles.hpp"

#include "nullsol/symbol.hpp"

#include <doctest.h>

#include <random>

using namespace nullsol;
using nullsol::testing::poly;

TEST_SUITE("symbol-analysis") {
  TEST_CASE("degree test") {
    CHECK_FALSE(degree_test(poly("T - (X1^2+X2^2+X3^2)")));
    CHECK(degree_test(poly("T^2 - (X1^2+X2^2+X3^2) + 1")));
    CHECK(degree_test(poly("T^5")));
    CHECK(degree_test(MultiPoly(2)));
  }

  TEST_CASE("principal part") {
    CHECK(principal_part(poly("T - (X1^2+X2^2+X3^2)")) == poly("-(X1^2+X2^2+X3^2)", 3));
    CHECK(principal_part(poly("T^2 - (X1^2+X2^2) + 1")) == poly("T^2 - (X1^2+X2^2)"));
    CHECK(principal_part(poly("X1*X2*T")) == poly("X1*X2*T"));
    CHECK_THROWS_AS(principal_part(MultiPoly(1)), std::invalid_argument);
  }

  TEST_CASE("characteristic normals") {
    std::vector<Rational> time_normal{0, 0, 0, 1};
    CHECK(is_characteristic_normal(poly("T - (X1^2+X2^2+X3^2)"), time_normal));
    std::vector<Rational> n2{0, 0, 1};
    CHECK_FALSE(is_characteristic_normal(poly("T^2 - (X1^2+X2^2) + 1"), n2));
    std::vector<Rational> diag{1, 1};
    CHECK(is_characteristic_normal(poly("T^2 - X1^2"), diag));
    std::vector<Rational> zero{0, 0};
    CHECK_THROWS_AS(is_characteristic_normal(poly("T^2 - X1^2"), zero), std::invalid_argument);
    CHECK_THROWS_AS(is_characteristic_normal(MultiPoly(1), diag), std::invalid_argument);
  }

  TEST_CASE("X-content") {
    auto g = x_content(poly("T - (X1^2+X2^2)"));
    REQUIRE(g.generators.size() == 2);
    CHECK(g.generators[0] == poly("-(X1^2+X2^2)"));
    CHECK(g.generators[1] == MultiPoly::constant(2, Gaussian(1)));
    auto m = x_content(poly("X1*X2*X3*T"));
    REQUIRE(m.generators.size() == 1);
    CHECK(m.generators[0] == poly("X1*X2*X3"));
    CHECK(x_content(MultiPoly(2)).generators.empty());
  }

  TEST_CASE("imaginary slice") {
    auto unit = imaginary_slice(ContentGenerators{2, {MultiPoly::constant(2, Gaussian(1))}});
    REQUIRE(unit.polys.size() == 1);
    CHECK(unit.polys[0] == MultiPoly::constant(2, Gaussian(1)));

    auto circle = imaginary_slice(ContentGenerators{2, {poly("X1^2+X2^2+1")}});
    REQUIRE(circle.polys.size() == 1);
    CHECK(circle.polys[0] == poly("-X1^2-X2^2+1"));

    auto shifted = imaginary_slice(ContentGenerators{1, {poly("X1 + i")}});
    REQUIRE(shifted.polys.size() == 1);
    CHECK(shifted.polys[0] == poly("X1 + 1"));
    CHECK(is_real_system(shifted));
  }

  TEST_CASE("duplicates are removed from the split") {
    auto sys = imaginary_slice(ContentGenerators{1, {poly("X1^2 + 1"), poly("X1^2 + 1")}});
    CHECK(sys.polys.size() == 1);
  }

  TEST_CASE("slice zeros match exact Gaussian evaluation") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      const int d = 1 + static_cast<int>(rng() % 2);
      std::vector<Rational> xi;
      for (int k = 0; k < d; ++k) xi.push_back(testing::random_rational(rng, 2));
      std::vector<Gaussian> at;
      for (const auto& x : xi) at.emplace_back(Rational(0), x);
      at.emplace_back(0);
      // plant the zero half of the time
      MultiPoly p = testing::random_poly(rng, d, 3, 4, 4, true);
      if (trial % 2 == 0) {
        MultiPoly planted(d);
        auto coeffs = coefficients_in_T(p);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
          MultiPoly a = coeffs[j] - MultiPoly::constant(d, eval(coeffs[j], at));
          planted += a * pow(MultiPoly::variable(d, d), j);
        }
        p = planted;
      }
      ContentGenerators g = x_content(p);
      if (g.generators.empty()) continue;
      RealPolySystem sys = imaginary_slice(g);
      bool all_generators_vanish = true;
      for (const auto& a : g.generators) all_generators_vanish = all_generators_vanish && eval(a, at).is_zero();
      bool system_vanishes = testing::vanishes_exactly(sys, xi);
      CHECK(all_generators_vanish == system_vanishes);
      CHECK(is_real_system(sys));
    }
  }

  TEST_CASE("invariants on random symbols") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
      const int d = static_cast<int>(rng() % 3);
      MultiPoly p = testing::random_poly(rng, d, 4, 5, 6, true);
      if (p.is_zero()) continue;
      Gaussian lambda = testing::random_gaussian(rng, 5);
      if (lambda.is_zero()) lambda = Gaussian(3);
      CHECK(degree_test(p) == degree_test(p.scaled(lambda)));

      MultiPoly pm = principal_part(p);
      CHECK(homogeneous_component(pm, total_degree(p)) == pm);
      CHECK(total_degree(p - pm) < total_degree(p));

      std::vector<Rational> time_normal(d + 1, 0);
      time_normal[d] = 1;
      CHECK(degree_test(p) == !is_characteristic_normal(p, time_normal));

      std::vector<Rational> n;
      for (int k = 0; k <= d; ++k) n.push_back(testing::random_rational(rng, 3));
      if (std::all_of(n.begin(), n.end(), [](const Rational& x) { return sgn(x) == 0; })) n[0] = 1;
      Rational mu = testing::random_rational(rng, 4);
      if (sgn(mu) == 0) mu = -2;
      std::vector<Rational> scaled;
      for (const auto& x : n) scaled.push_back(mu * x);
      CHECK(is_characteristic_normal(p, n) == is_characteristic_normal(p, scaled));
    }
  }

  TEST_CASE("pure ODE content lives in dimension 0") {
    auto g = x_content(poly("T^2 + 1"));
    CHECK(g.dimension == 0);
    auto sys = imaginary_slice(g);
    CHECK(sys.dimension == 0);
    CHECK(sys.polys.size() == 1);
  }
}
