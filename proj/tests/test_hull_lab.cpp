#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pconvex/errors.hpp"
#include "pconvex/hull_lab.hpp"
#include "pconvex/shapes.hpp"

using namespace pconvex;

namespace {

using Q = Rational;

CPolynomial<Q> identity_z() { return CPolynomial<Q>::variable(1, 0); }

}  // namespace

TEST_SUITE("hull_lab") {
  TEST_CASE("slit annulus curves") {
    const auto circle = regular_polygon<double>(4096);
    for (std::size_t k : {2u, 5u, 16u}) {
      auto s = slit_annulus_family<Q>(k, 512);
      CHECK(s.curve.size() == 512);
      CHECK(is_simple(s.curve).simple);
      CHECK(winding_number(s.curve, identity_z()) == 0);
      const double mesh = max_segment_length(s.curve);
      const auto cf = s.curve.convert<double>();
      CHECK(hausdorff_polylines(cf, circle, mesh / 4) <= 1.0 / static_cast<double>(k) + mesh);
      const double origin[2] = {0, 0};
      CHECK(s.hull.distance(origin) >= 1 - mesh);
      CHECK(s.hull.kind == HullKind::polygon_with_interior);
      // the enclosed arc lies in the modeled interior
      for (std::size_t i = 0; i < s.lambda.size(); ++i) {
        const double p[2] = {s.lambda.point(i)[0].get_d(), s.lambda.point(i)[1].get_d()};
        CHECK(s.hull.contains(p, 0));
      }
    }
    CHECK_THROWS_AS(slit_annulus_family<Q>(16, 16), InvalidInput);
    CHECK_THROWS_AS(slit_annulus_family<double>(1, 512), InvalidInput);
    auto sf = slit_annulus_family<double>(4, 256);
    CHECK(is_simple(sf.curve).simple);
    CHECK(winding_number(sf.curve, CPolynomial<double>::variable(1, 0)) == 0);
  }

  TEST_CASE("graph family") {
    const std::size_t n = 128;
    auto g = graph_family<Q>(4, n);
    auto cert = certify(g.sigma, OneForm<Q>::monomial({0, 1}, 0));
    CHECK(cert.verdict == Verdict::certified);
    const auto [re, im] = cert.integral_value();
    CHECK(std::abs(re) < 1e-9);
    CHECK(im == doctest::Approx(n * std::sin(2 * std::numbers::pi / n)).epsilon(1e-8));

    CHECK(g.sigma_k.is_simple());
    CHECK(g.sigma_k.base_winding() == 0);
    CHECK_FALSE(certificate_search(g.sigma_k, 3).has_value());
    for (const auto& v : monomial_integrals(g.sigma_k, 3)) CHECK(v.exactly_zero());

    const double mesh = std::max(max_segment_length(g.sigma_k_polyline), max_segment_length(g.sigma));
    const double d = hausdorff_polylines(g.sigma_k_polyline.convert<double>(), g.sigma.convert<double>(), mesh / 4);
    CHECK(d <= 3.0 / 4 + mesh);
  }

  TEST_CASE("Kallin example") {
    const double bound = 2 * (std::numbers::sqrt2 + 1) * std::numbers::pi;
    for (std::size_t k : {1u, 2u, 8u}) {
      auto kd = kallin_example(k, 256);
      CHECK(kd.limit_gap >= 0.99);
      CHECK(kd.witness_distance >= std::cos(std::numbers::pi / 256) - 1e-15);
      CHECK(kd.witness_distance <= 1);
      CHECK(kd.length_bound == doctest::Approx(bound));
      CHECK(kd.length_xk <= bound);
      CHECK(kd.uniform_distance <= std::numbers::sqrt2 / static_cast<double>(k) + 1e-15);
      // |w| on the stated hull is 1/k everywhere
      double sup_w = 0;
      for (std::size_t i = 0; i < kd.xk_hull.size(); ++i)
        sup_w = std::max(sup_w, std::hypot(kd.xk_hull.point(i)[2], kd.xk_hull.point(i)[3]));
      CHECK(sup_w == doctest::Approx(1.0 / static_cast<double>(k)));
    }
    CHECK(kallin_example(1, 512).length_xk >= 0.99 * bound);
  }

  TEST_CASE("polynomial inequalities on stated hulls") {
    std::vector<CompactSample<double>> xs;
    std::vector<HullModel> hulls;
    CompactSample<double> x;
    for (std::size_t k : {1u, 2u, 4u, 8u}) {
      auto kd = kallin_example(k, 256);
      xs.push_back(kd.xk);
      hulls.push_back(kd.xk_hull_model);
      x = kd.x;
    }
    auto rep = hull_limit_inequality(xs, hulls, x, 3, 20, 42);
    CHECK(rep.violations.empty());
    CHECK(rep.rows.size() == 4);
    CHECK(rep.to_csv() == hull_limit_inequality(xs, hulls, x, 3, 20, 42).to_csv());

    // a hull model that is too large breaks the maximum principle
    HullModel wrong = hulls[0];
    wrong.discs.push_back(HullDisc{{0, 0, 0, 0}, 0, 3});
    sample_hull(wrong, wrong.mesh);
    auto bad = hull_limit_inequality({xs[0]}, {wrong}, x, 3, 30, 1);
    CHECK_FALSE(bad.violations.empty());
  }

  TEST_CASE("tangent circles") {
    double prev = 1e9;
    for (std::size_t k = 1; k <= 6; ++k) {
      auto t = tangent_circles(k, 6, 512);
      CHECK(std::abs(t.length_x - t.length_xk) <= t.mesh);
      CHECK(t.uniform_distance > 0);
      CHECK(t.uniform_distance < prev);
      prev = t.uniform_distance;
    }
    CHECK_THROWS_AS(tangent_circles(7, 6, 512), InvalidInput);
  }

  TEST_CASE("csv and svg output") {
    ConvergenceReport r;
    r.columns = {"k", "d"};
    r.rows = {{"1", format_double(0.5)}, {"2", format_double(1.0 / 3)}};
    CHECK(r.to_csv() == "k,d\n1,0.5\n2,0.333333333333\n");
    auto s = slit_annulus_family<double>(3, 64);
    std::vector<SvgLayer> layers{{"gamma_3", "#c00", first_coordinate(s.curve), true, false},
                                 {"circle", "#00c", first_coordinate(regular_polygon<double>(64)), true, false}};
    const auto svg = render_svg(layers, "slit annulus");
    CHECK(svg == render_svg(layers, "slit annulus"));
    CHECK(svg.find("first complex coordinate") != std::string::npos);
    CHECK(svg.find("gamma_3") != std::string::npos);
  }
}
