#include "fixtures.hpp"
#include "oracles.hpp"

#include "nullsol/subdivision.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace nullsol;
using nullsol::testing::real_system;

TEST_SUITE("real-variety") {
  TEST_CASE("circle on [-2,2]^2 yields the exact zero (1,0)") {
    auto r = subdivision_search(real_system(2, {"-X1^2-X2^2+1"}), IntervalBox::cube(2, 2), SubdivisionOptions{});
    REQUIRE(r.kind == SubdivisionKind::ExactZero);
    CHECK(r.zero == std::vector<Rational>{1, 0});
  }

  TEST_CASE("x^2 + 1 on [-10,10] has no zero") {
    auto r = subdivision_search(real_system(1, {"X1^2+1"}), IntervalBox::cube(1, 10), SubdivisionOptions{});
    CHECK(r.kind == SubdivisionKind::NoZeroInBox);
  }

  TEST_CASE("x on [1,2] is discarded at depth 0") {
    IntervalBox box({Interval(rat(1), rat(2))});
    auto r = subdivision_search(real_system(1, {"X1"}), box, SubdivisionOptions{});
    CHECK(r.kind == SubdivisionKind::NoZeroInBox);
    REQUIRE(r.levels.size() == 1);
    CHECK(r.levels[0].discarded == 1);
  }

  TEST_CASE("irrational zeros stay unresolved") {
    SubdivisionOptions opts;
    opts.max_depth = 12;
    auto r = subdivision_search(real_system(1, {"X1^2-2"}), IntervalBox::cube(1, 4), opts);
    CHECK(r.kind == SubdivisionKind::CandidateBoxes);
    CHECK(r.candidates.size() == 2);
    for (const auto& b : r.candidates) {
      const double lo = b.sides[0].lo.get_d(), hi = b.sides[0].hi.get_d();
      const double root = lo < 0 ? -std::sqrt(2.0) : std::sqrt(2.0);
      CHECK(lo <= root);
      CHECK(root <= hi);
    }
  }

  TEST_CASE("frontier cap stops the search") {
    SubdivisionOptions opts;
    opts.max_boxes = 4;
    auto r = subdivision_search(real_system(2, {"X1^2-2"}), IntervalBox::cube(2, 4), opts);
    CHECK(r.kind == SubdivisionKind::CandidateBoxes);
    CHECK(r.frontier_capped);
  }

  TEST_CASE("candidate points") {
    IntervalBox box({Interval(rat(-1), rat(3)), Interval(rat(1, 3), rat(1, 2))});
    auto pts = candidate_points(box, 64);
    REQUIRE_FALSE(pts.empty());
    CHECK(std::find(pts.begin(), pts.end(), std::vector<Rational>{0, rat(1, 2)}) != pts.end());
    CHECK(std::find(pts.begin(), pts.end(), std::vector<Rational>{1, rat(5, 12)}) != pts.end());
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) CHECK(canonical_point_less(pts[k], pts[k + 1]));
    for (const auto& p : pts) CHECK(box.contains(p));
  }

  TEST_CASE("canonical point order") {
    std::vector<Rational> a{1, 0}, b{-1, 0}, c{0, 5};
    CHECK(canonical_point_less(a, b));
    CHECK(canonical_point_less(c, a));
    CHECK_FALSE(canonical_point_less(a, a));
  }

  TEST_CASE("serial and OpenMP kernels agree box by box") {
    std::mt19937_64 rng(4321);
    for (int trial = 0; trial < 40; ++trial) {
      const int d = 1 + static_cast<int>(rng() % 2);
      RealPolySystem sys{d, {testing::random_poly(rng, d, 3, 4, 4, false, true)}};
      if (sys.polys[0].is_zero()) continue;
      auto compiled = compile(sys);
      std::vector<IntervalBox> boxes{IntervalBox::cube(d, 4)};
      for (int split = 0; split < 6; ++split) {
        std::vector<IntervalBox> next;
        for (const auto& b : boxes) {
          auto [l, r] = b.bisect();
          next.push_back(l);
          next.push_back(r);
        }
        boxes = std::move(next);
      }
      auto serial = kernels::examine_boxes_serial(compiled, boxes, 64);
      for (int threads : {0, 2, 8}) CHECK(kernels::examine_boxes_parallel(compiled, boxes, 64, threads) == serial);
    }
  }

  TEST_CASE("search result does not depend on the thread count") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
      const int d = 1 + static_cast<int>(rng() % 2);
      RealPolySystem sys{d, {testing::random_poly(rng, d, 3, 4, 4, false, true)}};
      if (sys.polys[0].is_zero()) continue;
      SubdivisionOptions opts;
      opts.max_depth = 10;
      opts.threads = 1;
      auto ref = subdivision_search(sys, IntervalBox::cube(d, 8), opts);
      for (int threads : {2, 8}) {
        opts.threads = threads;
        auto r = subdivision_search(sys, IntervalBox::cube(d, 8), opts);
        CHECK(r.kind == ref.kind);
        CHECK(r.zero == ref.zero);
        CHECK(r.candidates == ref.candidates);
      }
    }
  }
}
