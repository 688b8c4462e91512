#include "pconvex/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pconvex/errors.hpp"
#include "pconvex/random.hpp"

namespace pconvex {

using Q = Rational;
using CQ = Complex<Q>;

Ball::Ball(Vec<Q> c, Q r) : center(std::move(c)), radius(std::move(r)) {
  if (sgn(radius) <= 0) throw InvalidInput("ball radius must be positive");
}

bool Ball::contains_open(std::span<const Q> x) const { return dist2<Q>(x, center) < radius * radius; }
bool Ball::contains_closed(std::span<const Q> x) const { return dist2<Q>(x, center) <= radius * radius; }

namespace {

struct Node {
  Q t;
  Vec<Q> x;
};

std::vector<CQ> as_complex(std::span<const Q> x) {
  std::vector<CQ> z;
  for (std::size_t j = 0; j + 1 < x.size(); j += 2) z.emplace_back(x[j], x[j + 1]);
  return z;
}

Vec<Q> as_real(const std::vector<CQ>& z) {
  Vec<Q> x;
  for (const auto& c : z) {
    x.push_back(c.re);
    x.push_back(c.im);
  }
  return x;
}

CQ hermitian(const std::vector<CQ>& x, const std::vector<CQ>& y) {
  CQ s;
  for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * y[j].conj();
  return s;
}

Q frac(const Q& t) {
  Q r = t;
  while (r >= 1) r -= 1;
  while (sgn(r) < 0) r += 1;
  return r;
}

// Polyline through the nodes in the given cyclic order; parameters are taken
// mod 1 and the list is rotated so they increase from the smallest.
PolyCurve<Q> closed_from_nodes(std::vector<Node> nodes, std::size_t dim) {
  for (auto& n : nodes) n.t = frac(n.t);
  auto first = std::min_element(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.t < b.t; });
  std::rotate(nodes.begin(), first, nodes.end());
  std::vector<Q> params, coords;
  for (auto& n : nodes) {
    params.push_back(n.t);
    coords.insert(coords.end(), n.x.begin(), n.x.end());
  }
  return PolyCurve<Q>(dim, true, std::move(params), std::move(coords));
}

Q global_param(const PolyCurve<Q>& c, std::size_t seg, const Q& s) { return c.param(seg) + s * c.segment_span(seg); }

Vec<Q> point_on(const PolyCurve<Q>& c, std::size_t seg, const Q& s) {
  return lerp<Q>(c.point(seg), c.point(c.next(seg)), s);
}

bool simple_quiet(const PolyCurve<Q>& c) {
  try {
    return is_simple(c).simple;
  } catch (const DegenerateSegment&) {
    return false;
  }
}

Surd seg_length(std::span<const Q> a, std::span<const Q> b) { return Surd::sqrt(dist2<Q>(a, b)); }

double norm_d(const Vec<Q>& v) {
  double s = 0;
  for (const Q& x : v) s += x.get_d() * x.get_d();
  return std::sqrt(s);
}

// Exact bisection on segment `seg` between local parameters `in` (inside the
// open ball around p of radius r) and `out` (outside or on the sphere); returns
// a dyadic inside parameter within 2^-40 of the crossing.
Q inner_crossing(const PolyCurve<Q>& c, std::size_t seg, Q in, Q out, std::span<const Q> p, const Q& r2) {
  for (int it = 0; it < 40; ++it) {
    Q mid = (in + out) / 2;
    if (dist2<Q>(point_on(c, seg, mid), p) < r2) {
      in = mid;
    } else {
      out = mid;
    }
  }
  return in;
}

struct Anchor {
  std::size_t seg;
  Q s;  // local parameter on seg
  Vec<Q> p;
};

Anchor choose_point(const PolyCurve<Q>& g, const Ball& B) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (B.contains_open(g.point(i))) return {i, Q(0), Vec<Q>(g.point(i).begin(), g.point(i).end())};
  }
  for (std::size_t i = 0; i < g.segment_count(); ++i) {
    auto [d2, s] = point_segment_dist2<Q>(B.center, g.point(i), g.point(g.next(i)));
    if (d2 < B.radius * B.radius) return {i, s, point_on(g, i, s)};
  }
  throw DomainError("the ball does not meet the curve");
}

// Run of consecutive segments meeting the open ball B_p; empty optional when
// the intersection is not a single sub-arc.
struct Run {
  std::size_t first;
  std::size_t last;
  std::size_t count;
};

std::optional<Run> single_arc(const PolyCurve<Q>& g, const Anchor& a, const Q& r2) {
  const std::size_t m = g.segment_count();
  std::vector<char> touch(m);
  std::size_t total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    touch[i] = point_segment_dist2<Q>(a.p, g.point(i), g.point(g.next(i))).first < r2;
    total += touch[i];
  }
  if (!touch[a.seg] || total >= m) return std::nullopt;
  std::size_t first = a.seg, last = a.seg, count = 1;
  while (touch[(first + m - 1) % m]) {
    first = (first + m - 1) % m;
    ++count;
  }
  while (touch[(last + 1) % m]) {
    last = (last + 1) % m;
    ++count;
  }
  if (count != total) return std::nullopt;
  // the sub-arc is connected iff every shared vertex of the run is inside
  for (std::size_t k = 1; k < count; ++k) {
    if (!(dist2<Q>(g.point((first + k) % m), a.p) < r2)) return std::nullopt;
  }
  return Run{first, last, count};
}

Vec<Q> random_direction(SeededRng& rng, std::size_t dim) {
  Vec<Q> v;
  for (double x : rng.unit_vector(dim)) v.push_back(snap(x, 24));
  return v;
}

void fill_integrals(PerturbResult& res, const OneForm<Q>& alpha) {
  res.plus_integral = contour_integral(res.plus_curve, alpha);
  res.minus_integral = contour_integral(res.minus_curve, alpha);
  res.sigma_integral = contour_integral(res.sigma, alpha);
}

void finish(PerturbResult& res, const PolyCurve<Q>& gamma, const OneForm<Q>& alpha) {
  res.side = res.plus_integral.exactly_zero() ? Side::minus : Side::plus;
  res.curve = res.side == Side::plus ? res.plus_curve : res.minus_curve;
  res.certificate = certify(res.curve, alpha);
  const PolyCurve<Q> diff = difference(gamma, res.curve);
  res.sup_distance = sup_norm(diff);
  res.variation_distance = total_variation(diff);
  res.bv_distance = res.sup_distance + res.variation_distance;
}

}  // namespace

PerturbResult perturb_rectifiable(const PolyCurve<Q>& gamma, const Q& eps, const Ball& B, std::uint64_t seed) {
  if (!gamma.closed()) throw InvalidInput("perturbation needs a closed curve");
  if (gamma.real_dim() % 2 != 0 || gamma.complex_dim() < 2) throw DimensionMismatch("perturbation needs a curve in C^n, n >= 2");
  if (B.center.size() != gamma.real_dim()) throw DimensionMismatch("ball and curve differ in dimension");
  if (sgn(eps) <= 0) throw InvalidInput("eps must be positive");
  require_simple(gamma, "perturbation input");

  const std::size_t dim = gamma.real_dim();
  const std::size_t m = gamma.segment_count();
  const Anchor anchor = choose_point(gamma, B);
  const Q pc2 = dist2<Q>(anchor.p, B.center);
  SeededRng rng(seed);
  int attempts = 0;

  Q r = std::min(Q(eps / 8), B.radius) / 2;
  for (int shrink = 0; shrink < 48; ++shrink, r /= 2) {
    const Q r2 = r * r;
    // B_p inside B
    if (!(B.radius > r) || (B.radius - r) * (B.radius - r) < pc2) continue;
    auto run = single_arc(gamma, anchor, r2);
    if (!run) continue;

    // exits through the sphere, rounded to rational points just inside
    const bool one = run->count == 1;
    const Q sa = inner_crossing(gamma, run->first, one ? anchor.s : Q(1), Q(0), anchor.p, r2);
    const Q sb = inner_crossing(gamma, run->last, one ? anchor.s : Q(0), Q(1), anchor.p, r2);
    const Vec<Q> a = point_on(gamma, run->first, sa);
    const Vec<Q> b = point_on(gamma, run->last, sb);
    if (a == b) continue;
    const Q ta = frac(global_param(gamma, run->first, sa));
    Q tb = frac(global_param(gamma, run->last, sb));
    if (tb <= ta) tb += 1;

    Surd lam;
    if (one) {
      lam = seg_length(a, b);
    } else {
      lam = seg_length(a, gamma.point(gamma.next(run->first)));
      for (std::size_t k = 1; k + 1 < run->count; ++k) {
        const std::size_t i = (run->first + k) % m;
        lam += seg_length(gamma.point(i), gamma.point(gamma.next(i)));
      }
      lam += seg_length(gamma.point(run->last), b);
    }
    if (!(lam < Surd(eps / 8))) continue;

    // Lambda: vertices last+1 ... first (cyclic), outside the replaced interval
    std::vector<Node> outside;
    for (std::size_t k = 0; k < m - run->count + 1; ++k) {
      const std::size_t i = (run->last + 1 + k) % m;
      Q t = gamma.param(i);
      outside.push_back({t, Vec<Q>(gamma.point(i).begin(), gamma.point(i).end())});
    }
    auto assemble = [&](const std::optional<Vec<Q>>& c) {
      std::vector<Node> nodes = outside;
      nodes.push_back({ta, a});
      if (c) nodes.push_back({(ta + tb) / 2, *c});
      nodes.push_back({tb, b});
      return closed_from_nodes(std::move(nodes), dim);
    };
    PolyCurve<Q> plus = assemble(std::nullopt);
    if (!simple_quiet(plus)) continue;

    const auto za = as_complex(a), zb = as_complex(b);
    std::vector<CQ> u;
    for (std::size_t j = 0; j < za.size(); ++j) u.push_back(zb[j] - za[j]);
    const CQ uu = hermitian(u, u);
    Vec<Q> mid(dim);
    for (std::size_t k = 0; k < dim; ++k) mid[k] = (a[k] + b[k]) / 2;
    const double room = r.get_d() - std::sqrt(dist2<Q>(mid, anchor.p).get_d());

    for (int trial = 0; trial < 64; ++trial) {
      ++attempts;
      // displacement Hermitian-orthogonal to b - a, so c - a is C-independent of b - a
      std::vector<CQ> d;
      if (trial == 0) {
        std::size_t j = 0, k = 1;
        for (std::size_t x = 0; x < u.size(); ++x) {
          if (u[x].norm2() > u[j].norm2()) j = x;
        }
        k = j == 0 ? 1 : 0;
        for (std::size_t x = 0; x < u.size(); ++x) {
          if (x != j && u[x].norm2() > u[k].norm2()) k = x;
        }
        d.assign(u.size(), CQ());
        d[j] = -u[k].conj();
        d[k] = u[j].conj();
      } else {
        d = as_complex(random_direction(rng, dim));
        const CQ coef = hermitian(d, u) / uu;
        for (std::size_t j = 0; j < d.size(); ++j) d[j] -= coef * u[j];
      }
      Vec<Q> dr = as_real(d);
      const double dn = norm_d(dr);
      if (dn == 0) continue;
      Q scale = snap(std::min(r.get_d() / 2, room / 2) / dn, 40);
      std::optional<Vec<Q>> c;
      for (int h = 0; h < 16 && sgn(scale) > 0; ++h, scale /= 2) {
        Vec<Q> cand(dim);
        for (std::size_t k = 0; k < dim; ++k) cand[k] = mid[k] + scale * dr[k];
        Q disp2(0);
        for (const Q& x : dr) disp2 += scale * scale * x * x;
        if (dist2<Q>(cand, anchor.p) < r2 && disp2 * 4 <= r2) {
          c = std::move(cand);
          break;
        }
      }
      if (!c) continue;
      const auto zc = as_complex(*c);
      std::vector<CQ> w;
      for (std::size_t j = 0; j < za.size(); ++j) w.push_back(zc[j] - za[j]);
      if (!independent_pivot<Q>(u, w)) continue;
      PolyCurve<Q> minus = assemble(c);
      if (!simple_quiet(minus)) continue;

      auto [frame, alpha] = totally_real_frame<Q>(za, u, w);
      PerturbResult res;
      res.plus_curve = std::move(plus);
      res.minus_curve = std::move(minus);
      res.sigma = PolyCurve<Q>::from_points(dim, true, [&] {
        Vec<Q> x = a;
        x.insert(x.end(), b.begin(), b.end());
        x.insert(x.end(), c->begin(), c->end());
        return x;
      }());
      fill_integrals(res, alpha);
      if (res.sigma_integral != CQ::i() || res.plus_integral - res.minus_integral != res.sigma_integral) {
        throw std::logic_error("perturbation: Stokes identity failed; this is a bug");
      }
      res.p = anchor.p;
      res.small_radius = r;
      res.replaced_length = lam;
      res.attempts = attempts;
      finish(res, gamma, alpha);
      return res;
    }
  }
  throw RetryExhausted("no admissible ball B_p and point c found; the curve is too dense near p for the shrink schedule");
}

PerturbResult perturb_smooth(const PolyCurve<Q>& gamma, const Q& eps, const Ball& B, std::uint64_t seed,
                             const SmoothOptions& opts) {
  if (!gamma.closed()) throw InvalidInput("perturbation needs a closed curve");
  if (gamma.real_dim() % 2 != 0 || gamma.complex_dim() < 2) throw DimensionMismatch("perturbation needs a curve in C^n, n >= 2");
  if (B.center.size() != gamma.real_dim()) throw DimensionMismatch("ball and curve differ in dimension");
  if (sgn(eps) <= 0) throw InvalidInput("eps must be positive");
  require_simple(gamma, "perturbation input");

  const std::size_t dim = gamma.real_dim();
  const std::size_t m = gamma.size();
  std::size_t ip = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (B.contains_open(gamma.point(i))) {
      ip = i;
      break;
    }
  }
  if (ip == m) throw DomainError("no sample point of the curve lies in the ball");
  const Q tp = gamma.param(ip);
  const Vec<Q> p(gamma.point(ip).begin(), gamma.point(ip).end());
  // central difference over the neighbouring samples
  const std::size_t prev = (ip + m - 1) % m, next = gamma.next(ip);
  Q dt = gamma.param(next) - gamma.param(prev);
  if (sgn(dt) <= 0) dt += 1;
  std::vector<CQ> tangent;
  {
    const auto zn = as_complex(gamma.point(next)), zp = as_complex(gamma.point(prev));
    for (std::size_t j = 0; j < zn.size(); ++j) tangent.push_back((zn[j] - zp[j]) * (Q(1) / dt));
  }
  const Q amp = opts.amplitude ? *opts.amplitude : eps / 4;
  SeededRng rng(seed);
  int attempts = 0;

  // cyclic parameter offset of vertex i from t_p, in (-1/2, 1/2]
  auto offset = [&](std::size_t i) {
    Q d = gamma.param(i) - tp;
    while (d > Q(1, 2)) d -= 1;
    while (d <= Q(-1, 2)) d += 1;
    return d;
  };

  Q w = opts.initial_half_width;
  for (int shrink = 0; shrink < opts.shrink_steps; ++shrink, w /= 2) {
    // bump values at the samples: chi = amp * e * exp(-1/(1-s^2)), peak amp at t_p
    std::vector<Q> chi(m, Q(0));
    std::size_t support = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Q s = offset(i) / w;
      if (abs(s) >= 1) continue;
      const double sd = s.get_d();
      const double shape = std::exp(1.0 - 1.0 / (1.0 - sd * sd));
      chi[i] = i == ip ? amp : amp * snap(shape, 40);
      support += sgn(chi[i]) != 0;
    }
    if (support == 0 || support + 2 > m) continue;
    // samples just outside the support; segments to them change as well
    std::size_t lo = ip, hi = ip;
    while (sgn(chi[(lo + m - 1) % m]) != 0) lo = (lo + m - 1) % m;
    while (sgn(chi[(hi + 1) % m]) != 0) hi = (hi + 1) % m;
    lo = (lo + m - 1) % m;
    hi = (hi + 1) % m;
    if (!B.contains_open(gamma.point(lo)) || !B.contains_open(gamma.point(hi))) continue;

    for (int trial = 0; trial < opts.direction_retries; ++trial) {
      ++attempts;
      const Vec<Q> v = random_direction(rng, dim);
      if (!independent_pivot<Q>(tangent, as_complex(v))) continue;
      std::vector<Q> cp = gamma.coords(), cm = gamma.coords();
      bool inside = true;
      for (std::size_t i = 0; i < m && inside; ++i) {
        if (sgn(chi[i]) == 0) continue;
        for (std::size_t k = 0; k < dim; ++k) {
          cp[i * dim + k] += chi[i] * v[k];
          cm[i * dim + k] -= chi[i] * v[k];
        }
        inside = B.contains_open(std::span<const Q>(cp.data() + i * dim, dim)) &&
                 B.contains_open(std::span<const Q>(cm.data() + i * dim, dim)) && B.contains_open(gamma.point(i));
      }
      if (!inside) break;  // support too wide for B: shrink
      PolyCurve<Q> plus(dim, true, gamma.params(), std::move(cp));
      PolyCurve<Q> minus(dim, true, gamma.params(), std::move(cm));
      if (!simple_quiet(plus) || !simple_quiet(minus)) continue;

      // sigma: plus over the support, back along minus
      Vec<Q> sc;
      for (std::size_t i = lo;; i = (i + 1) % m) {
        sc.insert(sc.end(), plus.point(i).begin(), plus.point(i).end());
        if (i == hi) break;
      }
      for (std::size_t i = (hi + m - 1) % m; i != lo; i = (i + m - 1) % m) {
        sc.insert(sc.end(), minus.point(i).begin(), minus.point(i).end());
      }
      auto [frame, alpha] = totally_real_frame<Q>(as_complex(p), tangent, as_complex(v));
      PerturbResult res;
      res.plus_curve = std::move(plus);
      res.minus_curve = std::move(minus);
      res.sigma = PolyCurve<Q>::from_points(dim, true, std::move(sc));
      fill_integrals(res, alpha);
      if (res.plus_integral - res.minus_integral != res.sigma_integral) {
        throw std::logic_error("perturbation: Stokes identity failed; this is a bug");
      }
      if (!(abs_double(res.sigma_integral) > opts.tol.tau) || res.sigma_integral.exactly_zero()) break;  // shrink
      res.p = p;
      res.small_radius = amp;
      res.attempts = attempts;
      finish(res, gamma, alpha);
      // first-order proximity: divided differences of the bump along the samples
      double fo = 0;
      const PolyCurve<Q> diff = difference(gamma, res.curve);
      for (std::size_t i = 0; i < diff.segment_count(); ++i) {
        const double span = diff.segment_span(i).get_d();
        fo = std::max(fo, std::sqrt(dist2<Q>(diff.point(i), diff.point(diff.next(i))).get_d()) / span);
      }
      res.first_order_deviation = fo;
      return res;
    }
  }
  throw RetryExhausted("smooth perturbation: direction retries or support shrink exhausted");
}

bool agree_outside_ball(const PolyCurve<Q>& x, const PolyCurve<Q>& y, const Ball& B) {
  auto covered = [&](const PolyCurve<Q>& X, const PolyCurve<Q>& Y) {
    for (std::size_t i = 0; i < X.segment_count(); ++i) {
      auto s0 = X.point(i), s1 = X.point(X.next(i));
      const Vec<Q> d = sub<Q>(s1, s0);
      const Q dd = dot<Q>(d, d);
      if (sgn(dd) == 0) {
        if (!B.contains_closed(s0) && point_curve_dist2<Q>(s0, Y) != 0) return false;
        continue;
      }
      // parameter intervals of S covered by collinear segments of Y
      std::vector<std::pair<Q, Q>> cover;
      auto param_on_line = [&](std::span<const Q> q) -> std::optional<Q> {
        const Vec<Q> e = sub<Q>(q, s0);
        Q t = dot<Q>(e, d) / dd;
        Vec<Q> proj = lerp<Q>(s0, s1, t);
        if (dist2<Q>(proj, q) != 0) return std::nullopt;
        return t;
      };
      for (std::size_t j = 0; j < Y.segment_count(); ++j) {
        auto ta = param_on_line(Y.point(j));
        if (!ta) continue;
        auto tb = param_on_line(Y.point(Y.next(j)));
        if (!tb) continue;
        Q lo = std::max(Q(0), std::min(*ta, *tb)), hi = std::min(Q(1), std::max(*ta, *tb));
        if (lo < hi) cover.emplace_back(lo, hi);
      }
      std::sort(cover.begin(), cover.end());
      Q reach(0);
      // the open gap lies in B once its ends are in the closed ball; an end
      // on the sphere must itself be a point of Y
      auto end_ok = [&](const Q& g) {
        const Vec<Q> q = lerp<Q>(s0, s1, g);
        return B.contains_open(q) || (B.contains_closed(q) && point_curve_dist2<Q>(q, Y) == 0);
      };
      auto gap_ok = [&](const Q& g0, const Q& g1) { return end_ok(g0) && end_ok(g1); };
      for (const auto& [lo, hi] : cover) {
        if (lo > reach && !gap_ok(reach, lo)) return false;
        if (hi > reach) reach = hi;
      }
      if (reach < 1 && !gap_ok(reach, Q(1))) return false;
    }
    return true;
  };
  return covered(x, y) && covered(y, x);
}

std::string verify_perturbation(const PolyCurve<Q>& gamma, const Q& eps, const Ball& B, const PerturbResult& r,
                                bool rectifiable) {
  std::ostringstream err;
  if (!simple_quiet(r.curve)) return "output is not simple";
  if (!r.certificate.certified()) return "certificate is not certified";
  const CQ again = contour_integral(r.curve, r.certificate.form);
  if (again != r.certificate.integral || again.exactly_zero()) return "certificate integral does not re-verify";
  const CQ plus = contour_integral(r.plus_curve, r.certificate.form);
  const CQ minus = contour_integral(r.minus_curve, r.certificate.form);
  const CQ sigma = contour_integral(r.sigma, r.certificate.form);
  if (plus - minus != sigma) return "Stokes difference identity fails";
  if (rectifiable && sigma != CQ::i()) return "triangle integral is not i";
  if (sigma.exactly_zero()) return "sigma integral vanishes";
  const Surd bv = bv_distance(gamma, r.curve);
  if (bv != r.bv_distance) return "reported bv distance does not match";
  if (!(bv < Surd(eps))) return "bv distance is not below eps";
  if (rectifiable) {
    if (!(bv <= Surd(eps * 7 / 8))) return "bv distance exceeds 7 eps / 8";
    const PolyCurve<Q> diff = difference(gamma, r.curve);
    if (!(r.replaced_length < Surd(eps / 8))) return "replaced arc is not shorter than eps / 8";
    if (!(sup_norm(diff) <= r.replaced_length + Surd(r.small_radius))) return "sup bound fails";
    if (!(total_variation(diff) <= r.replaced_length + Surd(r.small_radius * 4))) return "variation bound fails";
    if (!(r.small_radius < eps / 8)) return "B_p radius is not below eps / 8";
  } else {
    if (!(sup_distance(gamma, r.curve) < Surd(eps))) return "sup distance is not below eps";
  }
  if (!agree_outside_ball(gamma, r.curve, B)) return "curves differ outside B";
  return {};
}

}  // namespace pconvex
