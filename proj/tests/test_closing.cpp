#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pconvex/closing.hpp"
#include "pconvex/errors.hpp"
#include "pconvex/metrics.hpp"

using namespace pconvex;

namespace {

using Q = Rational;

// (e^{i theta}, theta / 4) for theta in [0, turn * 2 pi], padded to n complex coordinates
PolyCurve<Q> helix(std::size_t m, double turn, std::size_t n) {
  std::vector<Q> c;
  for (std::size_t i = 0; i < m; ++i) {
    const double th = turn * 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m - 1);
    c.push_back(snap(std::cos(th), 24));
    c.push_back(snap(std::sin(th), 24));
    c.push_back(snap(th / 4, 24));
    for (std::size_t j = 3; j < 2 * n; ++j) c.push_back(Q(0));
  }
  return PolyCurve<Q>::from_points(2 * n, false, c);
}

PolyCurve<Q> segment4() { return PolyCurve<Q>::from_points(4, false, {0, 0, 0, 0, 1, 0, Q(1, 2), 0}); }

void check_closed(const PolyCurve<Q>& arc, const Tube& tube, const ClosedArc& ca) {
  CHECK(ca.curve.closed());
  CHECK(is_simple(ca.curve).simple);
  CHECK(contains_subpolyline(ca.curve, arc));
  CHECK(tube.contains_curve(ca.curve));
  for (std::size_t i = 0; i < arc.size(); ++i) CHECK(std::ranges::equal(ca.curve.point(i), arc.point(i)));
}

}  // namespace

TEST_SUITE("closing") {
  TEST_CASE("tube membership") {
    Tube t(segment4(), Q(1, 5));
    CHECK(t.contains(std::vector<Q>{Q(1, 2), Q(1, 10), Q(1, 4), 0}));
    CHECK_FALSE(t.contains(std::vector<Q>{Q(6, 5), 0, Q(1, 2), 0}));
    CHECK(t.contains_curve(segment4()));
    CHECK_THROWS_AS(Tube(segment4(), Q(0)), InvalidInput);
  }

  TEST_CASE("sub-polyline detection") {
    auto sq = PolyCurve<Q>::from_points(2, true, {0, 0, 1, 0, 1, 1, 0, 1});
    CHECK(contains_subpolyline(sq, PolyCurve<Q>::from_points(2, false, {1, 1, 0, 1, 0, 0})));
    CHECK(contains_subpolyline(sq, PolyCurve<Q>::from_points(2, false, {0, 0, 0, 1})));
    CHECK_FALSE(contains_subpolyline(sq, PolyCurve<Q>::from_points(2, false, {0, 0, 1, 1})));
    CHECK_FALSE(contains_subpolyline(sq, PolyCurve<Q>::from_points(2, false, {0, 0, Q(1, 2), 0})));
  }

  TEST_CASE("segment closes into a stadium") {
    auto arc = segment4();
    Tube tube(arc, Q(1, 5));
    auto ca = close_arc(arc, tube, 1);
    CHECK_FALSE(ca.short_connector);
    check_closed(arc, tube, ca);
    CHECK(close_arc(arc, tube, 1).curve == ca.curve);
  }

  TEST_CASE("nearly closed arc gets short connectors") {
    // square arc whose ends are 1/25 apart
    auto arc = PolyCurve<Q>::from_points(4, false, {0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, Q(1, 25), 0, 0});
    Tube tube(arc, Q(1, 5));
    auto ca = close_arc(arc, tube, 2);
    CHECK(ca.short_connector);
    CHECK(ca.curve.size() == arc.size() + 2);
    check_closed(arc, tube, ca);
  }

  TEST_CASE("helix in C^3") {
    auto arc = helix(40, 0.8, 3);
    Tube tube(arc, Q(1, 5));
    auto ca = close_arc(arc, tube, 3);
    check_closed(arc, tube, ca);
  }

  TEST_CASE("closing errors") {
    auto arc = segment4();
    auto far = PolyCurve<Q>::from_points(4, false, {0, 0, 5, 0, 1, 0, 5, 0});
    CHECK_THROWS_AS(close_arc(arc, Tube(far, Q(1, 5)), 0), DomainError);
    auto planar = PolyCurve<Q>::from_points(2, false, {0, 0, 1, 0});
    CHECK_THROWS_AS(close_arc(planar, Tube(planar, Q(1)), 0), DimensionMismatch);
  }

  TEST_CASE("arc contained in a certified curve") {
    for (const auto& arc : {segment4(), helix(24, 0.75, 2)}) {
      Tube tube(arc, Q(1, 5));
      auto res = contain_in_pc_curve(arc, tube, Q(1, 50), 4);
      CHECK(res.certificate().verdict == Verdict::certified);
      CHECK_FALSE(contour_integral(res.curve(), res.certificate().form).exactly_zero());
      CHECK(contains_subpolyline(res.curve(), arc));
      CHECK(tube.contains_curve(res.curve()));
      CHECK(is_simple(res.curve()).simple);
      CHECK(verify_perturbation(res.closed.curve, Q(1, 50), res.ball, res.perturbation, true) == "");
    }
  }

  TEST_CASE("smaller tubes give closer curves") {
    auto arc = helix(24, 0.75, 2);
    const Q h(1, 200);
    for (Q r : {Q(1, 5), Q(1, 10), Q(1, 20)}) {
      auto res = contain_in_pc_curve(arc, Tube(arc, r), r / 10, 6);
      const double d = hausdorff_polylines(res.curve(), arc, h).to_double();
      CHECK(d < r.get_d() + h.get_d());
    }
  }
}
