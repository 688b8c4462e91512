#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pconvex/curve.hpp"
#include "pconvex/errors.hpp"
#include "pconvex/io.hpp"
#include "pconvex/shapes.hpp"

using namespace pconvex;

namespace {

Rational q(const char* s) { return parse_rational(s); }

PolyCurve<Rational> unit_square() {
  return PolyCurve<Rational>::from_points(2, true, {0, 0, 1, 0, 1, 1, 0, 1});
}

PolyCurve<Rational> centred_square() {
  return PolyCurve<Rational>::from_points(2, true, {q("-1/2"), q("-1/2"), q("1/2"), q("-1/2"), q("1/2"), q("1/2"),
                                                   q("-1/2"), q("1/2")});
}

// brute-force |a(t) - b(t)| over a dense uniform grid
template <class T>
double grid_sup_distance(const PolyCurve<T>& a, const PolyCurve<T>& b, int samples) {
  double best = 0;
  for (int s = 0; s < samples; ++s) {
    const double t = static_cast<double>(s) / samples;
    auto pa = a.template convert<double>().at(t);
    auto pb = b.template convert<double>().at(t);
    best = std::max(best, std::sqrt(dist2<double>(pa, pb)));
  }
  return best;
}

}  // namespace

TEST_SUITE("curve_core") {
  TEST_CASE("total variation of the unit square is 4") {
    CHECK(total_variation(unit_square()) == Surd(4));
    CHECK(total_variation(unit_square().convert<double>()) == doctest::Approx(4.0));
  }

  TEST_CASE("total variation of inscribed N-gons") {
    for (std::size_t n : {3u, 7u, 64u, 1000u}) {
      auto p = regular_polygon<double>(n);
      double brute = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const double a = 2 * std::numbers::pi * k / n, b = 2 * std::numbers::pi * (k + 1) / n;
        brute += std::hypot(std::cos(b) - std::cos(a), std::sin(b) - std::sin(a));
      }
      const double closed_form = n * 2 * std::sin(std::numbers::pi / n);
      CHECK(brute == doctest::Approx(closed_form).epsilon(1e-12));
      CHECK(total_variation(p) == doctest::Approx(closed_form).epsilon(1e-12));
    }
  }

  TEST_CASE("open diagonal segment has length sqrt 2") {
    PolyCurve<Rational> seg = PolyCurve<Rational>::from_points(2, false, {0, 0, 1, 1});
    CHECK(total_variation(seg) == Surd::sqrt(2));
    CHECK(total_variation(seg).to_string() == Surd::sqrt(2).to_string());
  }

  TEST_CASE("sup distance") {
    auto sq = unit_square();
    CHECK(sup_distance(sq, sq).is_zero());
    std::vector<Rational> moved = sq.coords();
    for (std::size_t i = 0; i < moved.size(); i += 2) moved[i] += q("1/10");
    PolyCurve<Rational> shifted(2, true, sq.params(), moved);
    CHECK(sup_distance(sq, shifted) == Surd(q("1/10")));

    auto p1 = regular_polygon<double>(12, 1.0);
    auto p2 = regular_polygon<double>(12, 2.0);
    CHECK(sup_distance(p1, p2) == doctest::Approx(1.0));
  }

  TEST_CASE("bv norm") {
    PolyCurve<Rational> constant = PolyCurve<Rational>::from_points(2, false, {0, 0, 0, 0});
    CHECK(bv_norm(constant).is_zero());
    CHECK(bv_norm(centred_square()) == Surd::sqrt(q("1/2")) + Surd(4));
    PolyCurve<Rational> seg = PolyCurve<Rational>::from_points(2, false, {0, 0, 1, 0});
    CHECK(bv_norm(seg) == Surd(2));
  }

  TEST_CASE("simplicity predicates") {
    CHECK(is_simple(unit_square()).simple);
    CHECK(is_simple(regular_polygon<Rational>(17)).simple);

    // bow tie: two triangles crossing at the origin
    PolyCurve<Rational> bow = PolyCurve<Rational>::from_points(2, true, {-1, -1, 1, 1, 1, -1, -1, 1});
    auto w = is_simple(bow);
    REQUIRE_FALSE(w.simple);
    REQUIRE(w.crossing.has_value());
    auto a = bow.at(w.crossing->first);
    auto b = bow.at(w.crossing->second);
    CHECK(a == b);
    CHECK(a == std::vector<Rational>{0, 0});

    auto lifted = conjugate_polygon<Rational>(40);
    CHECK(is_simple(lifted).simple);
    CHECK(is_simple_naive(lifted).simple);

    PolyCurve<Rational> degenerate = PolyCurve<Rational>::from_points(2, true, {0, 0, 0, 0, 1, 1});
    CHECK_THROWS_AS(is_simple(degenerate), DegenerateSegment);
    CHECK_THROWS_AS(require_simple(bow, "bow"), NotSimple);
  }

  TEST_CASE("fold-back of adjacent segments is not simple") {
    PolyCurve<Rational> fold = PolyCurve<Rational>::from_points(2, false, {0, 0, 2, 0, 1, 0});
    CHECK_FALSE(is_simple(fold).simple);
  }

  TEST_CASE("sweep agrees with the all-pairs oracle") {
    SeededRng rng(11);
    int non_simple = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t m = 3 + rng.below(9);
      auto c = random_closed_polyline<Rational>(1, m, rng, 4);
      if (c.has_zero_length_segment()) continue;
      auto fast = is_simple(c);
      auto slow = is_simple_naive(c);
      CHECK(fast.simple == slow.simple);
      CHECK(fast.segments == slow.segments);
      CHECK(fast.crossing == slow.crossing);
      non_simple += !slow.simple;
      auto cf = c.convert<double>();
      CHECK(is_simple(cf).simple == is_simple_naive(cf).simple);
    }
    CHECK(non_simple > 20);
  }

  TEST_CASE("refine leaves the map unchanged") {
    auto sq = unit_square();
    CHECK(refine(sq, {}) == sq);
    auto mid = refine(sq, {q("1/8"), q("3/8"), q("5/8"), q("7/8")});
    CHECK(mid.size() == 8);
    CHECK(total_variation(mid) == Surd(4));
    CHECK(bv_norm(mid) == bv_norm(sq));
    CHECK(sup_distance(mid, sq).is_zero());
    CHECK_THROWS_AS(refine(sq, {q("1/4")}), InvalidInput);
    CHECK_THROWS_AS(refine(sq, {Rational(1)}), InvalidInput);
    auto fine = refine_to_mesh(sq, q("1/10"));
    CHECK(mesh_size(fine) <= 0.1);
    CHECK(total_variation(fine) == Surd(4));
  }

  TEST_CASE("norm axioms on random curve pairs") {
    SeededRng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      auto a = random_closed_polyline<Rational>(2, 5, rng, 8);
      auto b = random_closed_polyline<Rational>(2, 5, rng, 8);
      auto c = random_closed_polyline<Rational>(2, 5, rng, 8);
      CHECK(bv_norm(a).sign() >= 0);
      CHECK(sup_distance(a, b) == sup_distance(b, a));
      CHECK(bv_distance(a, b) == bv_distance(b, a));
      CHECK(sup_distance(a, c) <= sup_distance(a, b) + sup_distance(b, c));
      CHECK(bv_distance(a, c) <= bv_distance(a, b) + bv_distance(b, c));
      CHECK(bv_distance(a, a).is_zero());
    }
  }

  TEST_CASE("sup distance matches a dense grid") {
    SeededRng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_closed_polyline<double>(2, 6, rng);
      auto b = random_closed_polyline<double>(2, 6, rng);
      // identical params: the difference is affine per cell and vertices lie on the grid
      CHECK(grid_sup_distance(a, b, 60) == doctest::Approx(sup_distance(a, b)).epsilon(1e-12));
    }
  }

  TEST_CASE("curve JSON round trip is bit-exact") {
    SeededRng rng(3);
    auto c = random_closed_polyline<Rational>(2, 7, rng, 40);
    auto text = curve_to_json(c).dump();
    auto back = curve_from_json<Rational>(Json::parse(text));
    CHECK(back == c);
    CHECK(curve_digest(back) == curve_digest(c));

    auto d = random_closed_polyline<double>(3, 5, rng);
    CHECK(curve_from_json<double>(Json::parse(curve_to_json(d).dump())) == d);

    Json bad = curve_to_json(c);
    bad["points"][2] = Json::array({"1/2", "1/3"});
    CHECK_THROWS_AS(curve_from_json<Rational>(bad), InvalidInput);
  }
}
