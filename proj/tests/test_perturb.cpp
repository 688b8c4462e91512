#include "doctest.h"
#include "pconvex/errors.hpp"
#include "pconvex/perturb.hpp"
#include "pconvex/shapes.hpp"

using namespace pconvex;

namespace {

using Q = Rational;

Ball ball_at(std::span<const Q> x, const Q& r) { return Ball(Vec<Q>(x.begin(), x.end()), r); }

// (e^{i theta}, 0) sampled at n points
PolyCurve<Q> circle_in_first_axis(std::size_t n) {
  auto p = regular_polygon<Q>(n);
  std::vector<Q> c;
  for (std::size_t i = 0; i < n; ++i) c.insert(c.end(), {p.point(i)[0], p.point(i)[1], Q(0), Q(0)});
  return PolyCurve<Q>::from_points(4, true, c);
}

}  // namespace

TEST_SUITE("perturb") {
  TEST_CASE("circle in a complex line becomes certifiable") {
    auto gamma = diagonal_polygon<Q>(32);
    const Q eps(1, 10);
    const Ball B = ball_at(gamma.point(0), Q(1, 5));
    auto res = perturb_rectifiable(gamma, eps, B, 7);
    CHECK(res.sigma_integral == Complex<Q>::i());
    CHECK(res.plus_integral - res.minus_integral == Complex<Q>::i());
    CHECK(res.certificate.verdict == Verdict::certified);
    CHECK(verify_perturbation(gamma, eps, B, res, true) == "");
    // the input itself is not certifiable by any low-degree monomial
    CHECK_FALSE(certificate_search(gamma, 2).has_value());
  }

  TEST_CASE("p inside a straight segment: plus side reproduces the map") {
    auto gamma = PolyCurve<Q>::from_points(4, true, {1, 0, 0, 0, 0, 1, 1, 0, -1, 0, 0, 1, 0, -1, 1, 1});
    const Q eps(1, 10);
    Vec<Q> mid{Q(1, 2), Q(1, 2), Q(1, 2), Q(0)};
    const Ball B(mid, Q(1, 20));
    auto res = perturb_rectifiable(gamma, eps, B, 1);
    CHECK(verify_perturbation(gamma, eps, B, res, true) == "");
    CHECK(bv_distance(gamma, res.plus_curve).is_zero());
    if (res.side == Side::plus) CHECK(res.bv_distance.is_zero());
  }

  TEST_CASE("already certifiable input still satisfies every postcondition") {
    auto gamma = conjugate_polygon<Q>(24);
    const Q eps(1, 20);
    const Ball B = ball_at(gamma.point(5), Q(1, 10));
    auto res = perturb_rectifiable(gamma, eps, B, 3);
    CHECK(verify_perturbation(gamma, eps, B, res, true) == "");
  }

  TEST_CASE("errors") {
    auto gamma = diagonal_polygon<Q>(16);
    CHECK_THROWS_AS(perturb_rectifiable(gamma, Q(1, 10), Ball({Q(5), Q(5), Q(5), Q(5)}, Q(1)), 0), DomainError);
    CHECK_THROWS_AS(perturb_rectifiable(regular_polygon<Q>(8), Q(1, 10), Ball({Q(1), Q(0)}, Q(1)), 0),
                    DimensionMismatch);
    CHECK_THROWS_AS(Ball({Q(0)}, Q(0)), InvalidInput);
  }

  TEST_CASE("random simple curves and determinism") {
    SeededRng rng(99);
    for (int trial = 0; trial < 6; ++trial) {
      auto planar = random_star_polygon<Q>(12 + trial, rng);
      auto gamma = lift_planar(planar, 2, rng);
      const Q eps(1, 8);
      const Ball B = ball_at(gamma.point(trial % gamma.size()), Q(1, 4));
      auto r1 = perturb_rectifiable(gamma, eps, B, 100 + trial);
      CHECK(verify_perturbation(gamma, eps, B, r1, true) == "");
      auto r2 = perturb_rectifiable(gamma, eps, B, 100 + trial);
      CHECK(r1.curve == r2.curve);
      CHECK(r1.certificate.integral == r2.certificate.integral);
    }
  }

  TEST_CASE("agree_outside_ball") {
    auto sq = PolyCurve<Q>::from_points(2, true, {0, 0, 4, 0, 4, 4, 0, 4});
    auto dent = PolyCurve<Q>::from_points(2, true, {0, 0, 1, 0, 2, 1, 3, 0, 4, 0, 4, 4, 0, 4});
    CHECK(agree_outside_ball(sq, sq, Ball({Q(9), Q(9)}, Q(1))));
    CHECK(agree_outside_ball(sq, dent, Ball({Q(2), Q(0)}, Q(3, 2))));
    CHECK_FALSE(agree_outside_ball(sq, dent, Ball({Q(2), Q(0)}, Q(1))));
    CHECK_FALSE(agree_outside_ball(sq, dent, Ball({Q(2), Q(1)}, Q(1, 2))));
  }

  TEST_CASE("smooth bump perturbation") {
    auto gamma = circle_in_first_axis(128);
    const Q eps(1, 10);
    const Ball B = ball_at(gamma.point(0), Q(1, 2));
    auto res = perturb_smooth(gamma, eps, B, 5);
    CHECK(res.plus_integral - res.minus_integral == res.sigma_integral);
    CHECK_FALSE(res.sigma_integral.exactly_zero());
    CHECK(verify_perturbation(gamma, eps, B, res, false) == "");
    CHECK(res.first_order_deviation > 0);

    SmoothOptions zero;
    zero.amplitude = Q(0);
    zero.shrink_steps = 4;
    zero.direction_retries = 4;
    CHECK_THROWS_AS(perturb_smooth(gamma, eps, B, 5, zero), RetryExhausted);
  }
}
