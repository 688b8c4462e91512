#include "pconvex/closing.hpp"

#include <algorithm>

#include "pconvex/errors.hpp"
#include "pconvex/random.hpp"

namespace pconvex {

namespace {

using Q = Rational;

constexpr int kRetries = 64;

Vec<Q> random_direction(SeededRng& rng, std::size_t k) {
  const auto u = rng.unit_vector(k);
  Vec<Q> d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = snap(u[i], 30);
  return d;
}

Vec<Q> offset(std::span<const Q> x, const Vec<Q>& d, const Q& h) {
  Vec<Q> y(x.begin(), x.end());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += h * d[i];
  return y;
}

bool simple_quiet(const PolyCurve<Q>& c) {
  if (c.has_zero_length_segment()) return false;
  return is_simple(c).simple;
}

}  // namespace

Tube::Tube(PolyCurve<Q> c, Q r) : core(std::move(c)), radius(std::move(r)) {
  if (core.closed()) throw InvalidInput("tube core must be an open polyline");
  if (sgn(radius) <= 0) throw InvalidInput("tube radius must be positive");
}

bool Tube::contains(std::span<const Q> x) const { return point_curve_dist2<Q>(x, core) < radius * radius; }

bool Tube::contains_curve(const PolyCurve<Q>& c) const {
  if (c.real_dim() != core.real_dim()) throw DimensionMismatch("curve and tube differ in dimension");
  for (std::size_t i = 0; i < c.segment_count(); ++i) {
    auto a = c.point(i), b = c.point(c.next(i));
    for (int j = 0; j <= 8; ++j) {
      if (!contains(lerp<Q>(a, b, Q(j, 8)))) return false;
    }
  }
  return c.segment_count() > 0 || contains(c.point(0));
}

bool contains_subpolyline(const PolyCurve<Q>& c, const PolyCurve<Q>& arc) {
  if (c.real_dim() != arc.real_dim()) return false;
  const std::size_t n = c.size(), m = arc.size();
  if (m > n) return false;
  auto same = [&](std::size_t i, std::size_t j) {
    auto a = c.point(i), b = arc.point(j);
    return std::equal(a.begin(), a.end(), b.begin());
  };
  for (std::size_t start = 0; start < n; ++start) {
    if (!same(start, 0)) continue;
    for (int dir : {1, -1}) {
      bool ok = true;
      for (std::size_t j = 1; j < m && ok; ++j) {
        const long raw = static_cast<long>(start) + dir * static_cast<long>(j);
        if (!c.closed() && (raw < 0 || raw >= static_cast<long>(n))) {
          ok = false;
          break;
        }
        const std::size_t i = static_cast<std::size_t>((raw % static_cast<long>(n) + static_cast<long>(n)) %
                                                       static_cast<long>(n));
        ok = same(i, j);
      }
      if (ok) return true;
    }
  }
  return false;
}

ClosedArc close_arc(const PolyCurve<Q>& arc, const Tube& omega, std::uint64_t seed) {
  if (arc.closed()) throw InvalidInput("close_arc needs an open arc");
  const std::size_t k = arc.real_dim();
  if (k < 4) throw DimensionMismatch("close_arc needs real dimension >= 4");
  require_simple(arc, "arc");
  if (!omega.contains_curve(arc)) throw DomainError("arc is not inside the tube");
  if (omega.radius < Q(1, 1UL << 40)) throw DomainError("tube radius below resolution");

  const std::size_t m = arc.size();
  auto p = arc.point(0), q = arc.point(m - 1);
  const Q r = omega.radius;
  const Q rho = r / 8, h = r / 2;
  const bool near = dist2<Q>(p, q) < r * r / 16;

  SeededRng rng(seed);
  for (int attempt = 1; attempt <= kRetries; ++attempt) {
    std::vector<Q> coords(arc.coords());
    const Vec<Q> q1 = offset(q, random_direction(rng, k), rho);
    const Vec<Q> p1 = offset(p, random_direction(rng, k), rho);
    coords.insert(coords.end(), q1.begin(), q1.end());
    if (!near) {
      const Vec<Q> d = random_direction(rng, k);
      for (std::size_t i = m; i-- > 0;) {
        const Vec<Q> y = offset(arc.point(i), d, h);
        coords.insert(coords.end(), y.begin(), y.end());
      }
    }
    coords.insert(coords.end(), p1.begin(), p1.end());
    auto curve = PolyCurve<Q>::from_points(k, true, std::move(coords));
    if (!simple_quiet(curve) || !omega.contains_curve(curve)) continue;
    return ClosedArc{std::move(curve), near, m, attempt};
  }
  throw RetryExhausted("close_arc: no simple closing curve inside the tube after " + std::to_string(kRetries) +
                       " attempts");
}

ContainResult contain_in_pc_curve(const PolyCurve<Q>& arc, const Tube& omega, const Q& eps, std::uint64_t seed) {
  if (sgn(eps) <= 0) throw InvalidInput("eps must be positive");
  ContainResult out;
  out.closed = close_arc(arc, omega, seed);
  const auto& g = out.closed.curve;

  // ball around the midpoint of the middle added segment
  const std::size_t first = out.closed.added_begin - 1;
  const std::size_t s = first + (g.size() - first) / 2;
  const Vec<Q> c = lerp<Q>(g.point(s), g.point(g.next(s)), Q(1, 2));
  const Q clear_arc = sqrt_lower(point_curve_dist2<Q>(c, arc)) / 2;
  const Q clear_tube = (omega.radius - sqrt_upper(point_curve_dist2<Q>(c, omega.core))) / 2;
  const Q R = std::min(clear_arc, clear_tube);
  if (sgn(R) <= 0) throw DomainError("no admissible ball: the added portion has no clearance");
  out.ball = Ball(c, R);

  out.perturbation = perturb_rectifiable(g, eps, out.ball, seed);
  const auto& res = out.perturbation.curve;
  if (!contains_subpolyline(res, arc)) throw std::logic_error("contain_in_pc_curve lost the arc");
  if (!omega.contains_curve(res)) throw std::logic_error("contain_in_pc_curve left the tube");
  return out;
}

}  // namespace pconvex
