#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pconvex/certificates.hpp"
#include "pconvex/errors.hpp"
#include "pconvex/io.hpp"
#include "pconvex/shapes.hpp"

using namespace pconvex;

namespace {

using C = Complex<Rational>;

OneForm<Rational> z2dz1() { return OneForm<Rational>::monomial({0, 1}, 0); }

// 2 * area of the planar polygon traced by the first coordinate
Rational twice_shoelace(const PolyCurve<Rational>& c) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto p = c.point(i);
    auto r = c.point(c.next(i));
    s += p[0] * r[1] - r[0] * p[1];
  }
  return s;
}

PolyCurve<Rational> triangle(const std::vector<C>& a, const std::vector<C>& b, const std::vector<C>& c) {
  std::vector<Rational> coords;
  for (const auto* p : {&a, &b, &c}) {
    for (const auto& z : *p) {
      coords.push_back(z.re);
      coords.push_back(z.im);
    }
  }
  return PolyCurve<Rational>::from_points(2 * a.size(), true, std::move(coords));
}

std::vector<C> random_point(SeededRng& rng, std::size_t n) {
  std::vector<C> z;
  for (std::size_t j = 0; j < n; ++j) z.emplace_back(snap(rng.uniform(-2, 2), 12), snap(rng.uniform(-2, 2), 12));
  return z;
}

CPolynomial<Rational> random_polynomial(SeededRng& rng, std::size_t n, unsigned degree) {
  CPolynomial<Rational> p(n);
  for (unsigned d = 0; d <= degree; ++d) {
    for (const auto& a : exponents_of_degree(n, d)) {
      if (rng.uniform() < 0.5) continue;
      p.add_term(a, C(snap(rng.uniform(-1, 1), 8), snap(rng.uniform(-1, 1), 8)));
    }
  }
  return p;
}

std::vector<C> sub(const std::vector<C>& a, const std::vector<C>& b) {
  std::vector<C> out;
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back(a[j] - b[j]);
  return out;
}

}  // namespace

TEST_SUITE("certificates") {
  TEST_CASE("exact forms integrate to zero") {
    SeededRng rng(1);
    auto c = random_closed_polyline<Rational>(2, 9, rng);
    CHECK(contour_integral(c, OneForm<Rational>::monomial({0, 0}, 0)).exactly_zero());
    CHECK(contour_integral(c, OneForm<Rational>::monomial({1, 0}, 0)).exactly_zero());
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 1 + rng.below(3);
      auto p = random_polynomial(rng, n, 5);
      auto curve = random_closed_polyline<Rational>(n, 4 + rng.below(6), rng);
      CHECK(contour_integral(curve, OneForm<Rational>::exact_differential(p)).exactly_zero());
    }
  }

  TEST_CASE("conjugate polygon integral, float mode") {
    const std::size_t n = 1024;
    auto c = conjugate_polygon<double>(n);
    auto v = contour_integral(c, z2dz1().convert<double>());
    const double expected = n * std::sin(2 * std::numbers::pi / n);
    CHECK(std::abs(v.re) < 1e-12);
    CHECK(std::abs(v.im - expected) < 1e-12);
    CHECK(std::abs(v.im - 2 * std::numbers::pi) < 1e-4);
  }

  TEST_CASE("conjugate polygon integral, rational mode equals 2i times the area") {
    auto c = conjugate_polygon<Rational>(64);
    auto v = contour_integral(c, z2dz1());
    CHECK(v.re == 0);
    CHECK(v.im == twice_shoelace(c));
    CHECK(std::abs(v.im.get_d() - 64 * std::sin(2 * std::numbers::pi / 64)) < 1e-7);
  }

  TEST_CASE("certify verdicts") {
    auto cert = certify(conjugate_polygon<Rational>(32), z2dz1());
    CHECK(cert.verdict == Verdict::certified);
    CHECK(cert.curve_digest.size() == 64);
    auto diag = certify(diagonal_polygon<Rational>(32), z2dz1());
    CHECK(diag.verdict == Verdict::inconclusive);
    CHECK(diag.integral.exactly_zero());
    auto fcert = certify(conjugate_polygon<double>(32), z2dz1().convert<double>());
    CHECK(fcert.verdict == Verdict::certified_float);

    PolyCurve<Rational> bow = PolyCurve<Rational>::from_points(4, true, {-1, -1, 0, 0, 1, 1, 0, 0, 1, -1, 0, 0, -1, 1, 0, 0});
    CHECK_THROWS_AS(certify(bow, z2dz1()), NotSimple);
    CHECK_THROWS_AS(certify(regular_polygon<Rational>(8), z2dz1()), DimensionMismatch);
  }

  TEST_CASE("certificate search order") {
    auto found = certificate_search(conjugate_polygon<Rational>(24), 1);
    REQUIRE(found.has_value());
    CHECK(found->form == z2dz1());
    CHECK_FALSE(certificate_search(diagonal_polygon<Rational>(24), 3).has_value());
    CHECK_FALSE(certificate_search(regular_polygon<Rational>(24), 6).has_value());

    auto forms = monomial_forms<Rational>(2, 1);
    REQUIRE(forms.size() == 6);
    CHECK(forms[0] == OneForm<Rational>::monomial({0, 0}, 0));
    CHECK(forms[1] == OneForm<Rational>::monomial({0, 0}, 1));
    CHECK(forms[2] == OneForm<Rational>::monomial({1, 0}, 0));
    CHECK(forms[3] == OneForm<Rational>::monomial({0, 1}, 0));
  }

  TEST_CASE("refinement, linearity and orientation") {
    SeededRng rng(4);
    auto c = random_closed_polyline<Rational>(2, 7, rng);
    auto p = random_polynomial(rng, 2, 3);
    auto q = random_polynomial(rng, 2, 3);
    OneForm<Rational> a({p, q});
    OneForm<Rational> b({q * q, p});
    auto ref = refine(c, {Rational(1, 3), Rational(5, 8), Rational(99, 100)});
    CHECK(contour_integral(ref, a) == contour_integral(c, a));
    OneForm<Rational> sum = a;
    sum += b;
    CHECK(contour_integral(c, sum) == contour_integral(c, a) + contour_integral(c, b));
    OneForm<Rational> scaled = a;
    const C s(Rational(2, 3), Rational(-5));
    scaled *= s;
    CHECK(contour_integral(c, scaled) == s * contour_integral(c, a));
    CHECK(contour_integral(c.reversed(), a) == -contour_integral(c, a));
  }

  TEST_CASE("winding numbers") {
    auto gon = regular_polygon<Rational>(16);
    CHECK(winding_number(gon, CPolynomial<Rational>::variable(1, 0)) == 1);
    CHECK(winding_number(gon.reversed(), CPolynomial<Rational>::variable(1, 0)) == -1);
    CHECK(winding_number(gon, CPolynomial<Rational>::constant(1, C(1))) == 0);
    // z^3 - 1/8 has three roots inside
    auto cubic = CPolynomial<Rational>::monomial({3});
    cubic.add_term({0}, C(Rational(-1, 8)));
    CHECK(winding_number(gon, cubic) == 3);
    CHECK(winding_number(refine(gon, {Rational(1, 100)}), cubic) == 3);
    CHECK(winding_number(gon.convert<double>(), cubic.convert<double>()) == 3);

    auto conj = conjugate_polygon<Rational>(12);
    CHECK(winding_number(conj, CPolynomial<Rational>::variable(2, 0)) == 1);
    CHECK(winding_number(conj, CPolynomial<Rational>::variable(2, 1)) == -1);

    // f = z - 1 vanishes at a vertex of the polygon
    auto shifted = CPolynomial<Rational>::variable(1, 0);
    shifted.add_term({0}, C(-1));
    CHECK_THROWS_AS(winding_number(gon, shifted), DomainError);
  }

  TEST_CASE("totally real frame on the coordinate triangle") {
    std::vector<C> a{C(0), C(0)}, b{C(1), C(0)}, c{C(0), C(1)};
    auto [frame, form] = totally_real_frame<Rational>(a, sub(b, a), sub(c, a));
    auto ub = frame.apply(sub(b, a));
    CHECK(ub.first == C(1));
    CHECK(ub.second == C(1));
    auto uw = frame.apply(sub(c, a));
    CHECK(uw.first == C::i());
    CHECK(uw.second == -C::i());
    CHECK(contour_integral(triangle(a, b, c), form) == C::i());
    CHECK(contour_integral(triangle(a, c, b), form) == -C::i());
  }

  TEST_CASE("frame integral is exactly i for random triples") {
    SeededRng rng(21);
    int done = 0;
    while (done < 100) {
      const std::size_t n = 2 + (done % 2);
      auto a = random_point(rng, n), b = random_point(rng, n), c = random_point(rng, n);
      if (!independent_pivot<Rational>(sub(b, a), sub(c, a))) continue;
      auto [frame, form] = totally_real_frame<Rational>(a, sub(b, a), sub(c, a));
      CHECK(contour_integral(triangle(a, b, c), form) == C::i());
      ++done;
    }
  }

  TEST_CASE("frame rejects complex-collinear data") {
    std::vector<C> a{C(0), C(0)};
    std::vector<C> u{C(1), C(2)};
    std::vector<C> w{C(0, 1), C(0, 2)};  // i * u
    CHECK_THROWS_AS(totally_real_frame<Rational>(a, u, w), DomainError);
  }

  TEST_CASE("monomial image curve integrals") {
    MonomialImageCurve<Rational> sigma(regular_polygon<Rational>(32), {1, -1});
    CHECK(sigma.is_simple());
    auto r = sigma.integral_per_two_pi_i(z2dz1());
    CHECK(r == C(1));
    auto cert = certify(sigma, z2dz1());
    CHECK(cert.certified());
    CHECK(cert.integral_value().second == doctest::Approx(2 * std::numbers::pi));

    // a polygon not enclosing 0: every monomial integral vanishes
    std::vector<Rational> coords;
    auto small = regular_polygon<Rational>(16, 0.25);
    for (std::size_t i = 0; i < small.size(); ++i) {
      coords.push_back(small.point(i)[0] + 1);
      coords.push_back(small.point(i)[1]);
    }
    MonomialImageCurve<Rational> off(PolyCurve<Rational>::from_points(2, true, coords), {1, -1});
    for (const auto& v : monomial_integrals(off, 3)) CHECK(v.exactly_zero());
    CHECK_FALSE(certificate_search(off, 3).has_value());
  }

  TEST_CASE("polynomial and form JSON round trip") {
    SeededRng rng(8);
    auto p = random_polynomial(rng, 3, 3);
    CHECK(polynomial_from_json<Rational>(Json::parse(polynomial_to_json(p).dump())) == p);
    OneForm<Rational> f({p, p * p, CPolynomial<Rational>(3)});
    CHECK(form_from_json<Rational>(Json::parse(form_to_json(f).dump())) == f);
  }
}
