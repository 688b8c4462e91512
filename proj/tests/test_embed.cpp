#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pconvex/embed.hpp"
#include "pconvex/errors.hpp"
#include "pconvex/shapes.hpp"

using namespace pconvex;

namespace {

using Q = Rational;

// planar figure-eight (sin 2 pi t, sin 4 pi t / 2), optionally padded with zero coordinates
template <class T>
PolyCurve<T> figure_eight(std::size_t n, std::size_t k) {
  std::vector<T> c;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n);
    c.push_back(snap_to<T>(std::sin(2 * std::numbers::pi * t), 30));
    c.push_back(snap_to<T>(std::sin(4 * std::numbers::pi * t) / 2, 30));
    for (std::size_t j = 2; j < k; ++j) c.push_back(T(0));
  }
  return PolyCurve<T>::from_points(k, true, c);
}

}  // namespace

TEST_SUITE("embed") {
  TEST_CASE("graph lifts are injective") {
    auto constant = PolyCurve<Q>::from_points(3, false, {1, 2, 3, 1, 2, 3});
    CHECK_FALSE(is_injective_map(constant));
    auto lc = graph_lift(constant);
    CHECK(lc.real_dim() == 4);
    CHECK(is_injective_map(lc));

    auto fig = figure_eight<Q>(64, 3);
    CHECK_FALSE(is_injective_map(fig));
    auto lf = graph_lift(fig);
    CHECK(lf.real_dim() == 5);
    CHECK(is_injective_map(lf));
    // the circle factor is exact
    for (std::size_t i = 0; i < lf.size(); ++i) CHECK(lf.point(i)[0] * lf.point(i)[0] + lf.point(i)[1] * lf.point(i)[1] == 1);

    auto cc = PolyCurve<double>::from_points(1, true, {5, 5, 5, 5});
    auto lcc = graph_lift(cc);
    CHECK(is_injective_map(lcc));
    CHECK(std::abs(lcc.point(1)[0]) < 1e-15);
    CHECK(lcc.point(1)[2] == 5);
  }

  TEST_CASE("fold-back and constant pieces are not injective") {
    auto fold = PolyCurve<Q>::from_points(3, false, {0, 0, 0, 1, 0, 0, Q(1, 2), 0, 0});
    CHECK_FALSE(is_injective_map(fold));
    auto pause = PolyCurve<Q>::from_points(3, false, {0, 0, 0, 1, 0, 0, 1, 0, 0, 2, 0, 0});
    CHECK_FALSE(is_injective_map(pause));
  }

  TEST_CASE("covering bound closed forms") {
    auto seg = PolyCurve<Q>::from_points(1, false, {0, 1});
    auto r = secant_cover_bound(seg, 4);
    CHECK(r.holds());
    for (double d : r.box_diameters) CHECK(d == doctest::Approx(std::numbers::sqrt2 / 4).epsilon(1e-14));
    CHECK(r.sum_delta2 == doctest::Approx(2.0).epsilon(1e-14));

    auto pt = PolyCurve<Q>::from_points(2, false, {3, 3, 3, 3});
    auto z = secant_cover_bound(pt, 8);
    CHECK(z.holds());
    CHECK(z.sum_delta2 == 0);
    CHECK(z.sum_bound == 0);

    auto sq = PolyCurve<double>::from_points(2, true, {0, 0, 1, 0, 1, 1, 0, 1});
    auto s = secant_cover_bound(sq, 8);
    CHECK(s.holds());
    CHECK(s.length == 4);
    // each piece is a straight half-edge
    for (double d : s.piece_diameters) CHECK(d == doctest::Approx(0.5));
    CHECK_THROWS_AS(secant_cover_bound(sq, 0), InvalidInput);
  }

  TEST_CASE("covering bound on random curves") {
    SeededRng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      auto c = random_closed_polyline<double>(1 + trial % 3, 5 + trial, rng, 30);
      for (std::size_t m = 1; m <= 64; ++m) {
        auto r = secant_cover_bound(c, m);
        CHECK(r.holds());
      }
    }
  }

  TEST_CASE("generic projection of a lifted figure-eight") {
    auto lift = graph_lift(figure_eight<Q>(48, 2));
    REQUIRE(lift.real_dim() == 4);
    const Q eps(1, 100);
    auto pr = generic_project(lift, eps, 11);
    CHECK(pr.image.real_dim() == 3);
    CHECK(is_injective_map(pr.image));
    CHECK(pr.op.deviation < Surd(eps));
    CHECK(std::abs(pr.op.svd_deviation - pr.op.deviation.to_double()) < 1e-12);
    auto again = generic_project(lift, eps, 11);
    CHECK(again.image == pr.image);
  }

  TEST_CASE("generic projection accepts e1 when the shadow is injective") {
    // shadow in the last three coordinates is a triangle
    auto s = PolyCurve<Q>::from_points(4, true, {0, 0, 0, 0, 5, 1, 0, 0, -3, 0, 1, 0});
    auto pr = generic_project(s, Q(1, 10), 1);
    CHECK(pr.op.trial == 0);
    CHECK(pr.op.deviation.is_zero());
    CHECK_THROWS_AS(generic_project(PolyCurve<Q>::from_points(3, true, {0, 0, 0, 1, 0, 0, 0, 1, 0}), Q(1), 0),
                    InvalidInput);
  }

  TEST_CASE("make_injective on a figure-eight") {
    const Q eps(1, 100);
    auto fig = figure_eight<Q>(64, 3);
    auto r = make_injective(fig, eps, 3);
    CHECK_FALSE(r.unchanged);
    CHECK(r.stages.size() == 2);
    CHECK(is_injective_map(r.map));
    CHECK(r.map.real_dim() == 3);
    CHECK(r.bv_distance < Surd(eps));
    CHECK(r.budget_ok);
    CHECK(make_injective(fig, eps, 3).map == r.map);

    auto rf = make_injective(figure_eight<double>(64, 3), 0.01, 3);
    CHECK(is_injective_map(rf.map));
    CHECK(rf.bv_distance < 0.01);
  }

  TEST_CASE("make_injective on a constant map and on injective input") {
    const Q eps(1, 100);
    auto constant = PolyCurve<Q>::from_points(3, false, {1, 2, 3, 1, 2, 3});
    auto r = make_injective(constant, eps, 9);
    CHECK(is_injective_map(r.map));
    CHECK(r.bv_distance < Surd(eps));
    CHECK(r.budget_ok);

    auto helix = PolyCurve<Q>::from_points(3, false, {0, 0, 0, 1, 0, 1, 1, 1, 2, 0, 1, 3});
    auto same = make_injective(helix, eps, 9);
    CHECK(same.unchanged);
    CHECK(same.map == helix);
    CHECK_THROWS_AS(make_injective(PolyCurve<Q>::from_points(2, false, {0, 0, 0, 0}), eps, 0), InvalidInput);
  }
}
