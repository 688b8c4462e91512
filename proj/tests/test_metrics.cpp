#include <cmath>

#include "doctest.h"
#include "pconvex/errors.hpp"
#include "pconvex/metrics.hpp"
#include "pconvex/shapes.hpp"

using namespace pconvex;

namespace {

template <class T>
CompactSample<T> random_sample(SeededRng& rng, std::size_t dim, std::size_t n, double spread = 1.0) {
  std::vector<T> c;
  for (std::size_t i = 0; i < dim * n; ++i) c.push_back(snap_to<T>(rng.uniform(-spread, spread), 20));
  return CompactSample<T>(dim, std::move(c));
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("point cloud closed forms") {
    CompactSample<Rational> a(2, {0, 0});
    CompactSample<Rational> b(2, {0, 0, 3, 4});
    CHECK(hausdorff_points(a, a).is_zero());
    CHECK(hausdorff_points(a, b) == Surd(5));
    CHECK(hausdorff_points(b, a) == Surd(5));
    CHECK(directed_hausdorff2(a, b) == 0);
    CHECK_THROWS_AS(hausdorff_points(a, CompactSample<Rational>(3, {0, 0, 0})), DimensionMismatch);
  }

  TEST_CASE("grid path equals the brute-force oracle") {
    SeededRng rng(17);
    for (std::size_t dim : {1u, 2u, 3u, 4u, 6u}) {
      for (int trial = 0; trial < 3; ++trial) {
        auto a = random_sample<Rational>(rng, dim, 200);
        auto b = random_sample<Rational>(rng, dim, 200, 1.5);
        CHECK(directed_hausdorff2(a, b) == directed_hausdorff2_brute(a, b));
        CHECK(directed_hausdorff2(b, a) == directed_hausdorff2_brute(b, a));
        auto af = random_sample<double>(rng, dim, 300);
        auto bf = random_sample<double>(rng, dim, 150, 0.3);
        CHECK(directed_hausdorff2(af, bf) == directed_hausdorff2_brute(af, bf));
        CHECK(hausdorff_points(af, bf) == hausdorff_points_brute(af, bf));
      }
    }
    // clustered data and a far outlier
    CompactSample<double> cl(2, {0, 0, 1e-6, 0, 0, 1e-6, 100, 100});
    CompactSample<double> q(2, {0.5, 0.5, -3, 7, 1e-7, 1e-7});
    CHECK(directed_hausdorff2(q, cl) == directed_hausdorff2_brute(q, cl));
    CHECK(directed_hausdorff2(cl, q) == directed_hausdorff2_brute(cl, q));
  }

  TEST_CASE("metric axioms and monotonicity") {
    SeededRng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_sample<double>(rng, 3, 40);
      auto b = random_sample<double>(rng, 3, 40);
      auto c = random_sample<double>(rng, 3, 40);
      CHECK(hausdorff_points(a, a) == 0);
      CHECK(hausdorff_points(a, b) == hausdorff_points(b, a));
      CHECK(hausdorff_points(a, c) <= hausdorff_points(a, b) + hausdorff_points(b, c) + 1e-15);
      CompactSample<double> bigger = b;
      for (std::size_t i = 0; i < c.size(); ++i) bigger.append(c.point(i));
      CHECK(directed_hausdorff2(a, bigger) <= directed_hausdorff2(a, b));
    }
  }

  TEST_CASE("polyline Hausdorff distance") {
    auto p = regular_polygon<double>(64);
    CHECK(hausdorff_polylines(p, p, 0.01) < 1e-15);
    auto pr = regular_polygon<Rational>(32);
    CHECK(hausdorff_polylines(pr, pr, Rational(1, 100)).is_zero());
    for (int k : {2, 5, 10}) {
      auto outer = regular_polygon<double>(64, 1.0 + 1.0 / k);
      const double h = 0.01;
      CHECK(std::abs(hausdorff_polylines(p, outer, h) - 1.0 / k) <= h / 2 + 1e-12);
    }
    PolyCurve<Rational> s1 = PolyCurve<Rational>::from_points(2, false, {0, 0, 1, 0});
    PolyCurve<Rational> s2 = PolyCurve<Rational>::from_points(2, false, {0, Rational(3, 10), 1, Rational(3, 10)});
    CHECK(hausdorff_polylines(s1, s2, Rational(1, 16)) == Surd(Rational(3, 10)));
  }

  TEST_CASE("sample-to-polyline distance equals the all-segments maximum") {
    SeededRng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      auto c = random_closed_polyline<double>(1 + trial % 2, 40 + trial, rng);
      auto a = CompactSample<double>::from_curve(refine_to_mesh(random_closed_polyline<double>(1 + trial % 2, 30, rng), 0.05));
      double brute = 0;
      for (std::size_t i = 0; i < a.size(); ++i) brute = std::max(brute, point_curve_dist2<double>(a.point(i), c));
      CHECK(directed_to_polyline2(a, c) == brute);
    }
  }

  TEST_CASE("polyline distance error stays within h/2") {
    // the far vertex of a spike lies midway between refinement points of
    // the straight segment only when h is coarse; both errors are <= h/2
    PolyCurve<double> flat = PolyCurve<double>::from_points(2, false, {0, 0, 1, 0});
    PolyCurve<double> tent = PolyCurve<double>::from_points(2, false, {0, 0, 0.5, 0.2, 1, 0});
    for (double h : {0.5, 0.1, 0.01}) {
      const double v = hausdorff_polylines(flat, tent, h);
      CHECK(v <= 0.2 + 1e-15);
      CHECK(v >= 0.2 - h / 2);
    }
  }
}
