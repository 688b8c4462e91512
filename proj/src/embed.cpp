#include "pconvex/embed.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pconvex/errors.hpp"
#include "pconvex/random.hpp"

namespace pconvex {

namespace {

using Q = Rational;

// Point of the unit circle at angle 2 pi theta. The rational version is the
// stereographic image of a snapped tan(pi theta), so it lies exactly on the
// circle and distinct snapped values give distinct points.
template <class T>
std::pair<T, T> circle_point(const T& theta) {
  if constexpr (NumTraits<T>::exact) {
    if (sgn(theta) == 0) return {Q(1), Q(0)};
    if (theta == Q(1, 2)) return {Q(-1), Q(0)};
    const Q t = snap(std::tan(std::numbers::pi * theta.get_d()), 40);
    if (sgn(t) == 0) throw InvalidInput("circle parameter too close to 0 for the rational lift");
    const Q t2 = t * t;
    return {Q((1 - t2) / (1 + t2)), Q(2 * t / (1 + t2))};
  } else {
    const double a = 2 * std::numbers::pi * theta;
    return {std::cos(a), std::sin(a)};
  }
}

template <class T>
PolyCurve<T> drop_first(const PolyCurve<T>& c) {
  const std::size_t k = c.real_dim();
  std::vector<T> coords;
  coords.reserve(c.size() * (k - 1));
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto p = c.point(i);
    coords.insert(coords.end(), p.begin() + 1, p.end());
  }
  return PolyCurve<T>(k - 1, c.closed(), c.params(), std::move(coords));
}

template <class T>
T upper_bound_of(const Length<T>& x) {
  if constexpr (NumTraits<T>::exact) {
    Q u = snap(x.to_double() * (1 + 1e-9) + 1e-12, 40);
    while (Surd(u) < x) u *= 2;
    return u;
  } else {
    return x;
  }
}

template <class T>
std::string describe_witness(const SimplicityWitness<T>& w) {
  std::ostringstream os;
  if (w.segments) os << "segments " << w.segments->first << " and " << w.segments->second;
  if (w.crossing) os << " meet at parameters " << to_double(w.crossing->first) << ", " << to_double(w.crossing->second);
  return os.str();
}

}  // namespace

template <class T>
bool is_injective_map(const PolyCurve<T>& m, const Tolerance& tol) {
  if (m.has_zero_length_segment()) return false;
  return is_simple(m, tol).simple;
}

template <class T>
PolyCurve<T> graph_lift(const PolyCurve<T>& g) {
  const std::size_t k = g.real_dim();
  const std::size_t extra = g.closed() ? 2 : 1;
  std::vector<T> coords;
  coords.reserve(g.size() * (k + extra));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.closed()) {
      auto [c, s] = circle_point(g.param(i));
      coords.push_back(c);
      coords.push_back(s);
    } else {
      coords.push_back(g.param(i));
    }
    auto p = g.point(i);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  if constexpr (NumTraits<T>::exact) {
    if (g.closed()) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        const std::size_t j = g.next(i);
        if (coords[i * (k + 2)] == coords[j * (k + 2)] && coords[i * (k + 2) + 1] == coords[j * (k + 2) + 1])
          throw InvalidInput("circle parameters too close for the rational lift");
      }
    }
  }
  return PolyCurve<T>(k + extra, g.closed(), g.params(), std::move(coords));
}

template <class T>
CoverReport secant_cover_bound(const PolyCurve<T>& g, std::size_t m) {
  if (m == 0) throw InvalidInput("secant_cover_bound needs m >= 1");
  const std::size_t k = g.real_dim();
  const std::size_t segs = g.segment_count();
  std::vector<double> pts(g.size() * k);
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = to_double(g.coords()[i]);
  auto pt = [&](std::size_t i) { return std::span<const double>(pts.data() + i * k, k); };
  std::vector<double> cum(segs + 1, 0.0);
  for (std::size_t s = 0; s < segs; ++s) cum[s + 1] = cum[s] + std::sqrt(dist2<double>(pt(s), pt(g.next(s))));
  const double l = cum[segs];

  // point at arc length a, located by bisection on the cumulative lengths
  auto at_length = [&](double a) {
    std::size_t lo = 0, hi = segs;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      (cum[mid] <= a ? lo : hi) = mid;
    }
    const double len = cum[lo + 1] - cum[lo];
    const double s = len > 0 ? std::clamp((a - cum[lo]) / len, 0.0, 1.0) : 0.0;
    return std::make_pair(lo, lerp<double>(pt(lo), pt(g.next(lo)), s));
  };

  CoverReport r;
  r.m = m;
  r.length = l;
  r.piece_diameters.assign(m, 0.0);
  if (l > 0) {
    for (std::size_t j = 0; j < m; ++j) {
      const double a0 = l * static_cast<double>(j) / static_cast<double>(m);
      const double a1 = l * static_cast<double>(j + 1) / static_cast<double>(m);
      auto [s0, p0] = at_length(a0);
      auto [s1, p1] = at_length(a1);
      std::vector<Vec<double>> piece{p0};
      for (std::size_t s = s0 + 1; s <= s1 && s <= segs; ++s) {
        if (cum[s] > a0 && cum[s] < a1) {
          auto p = pt(s == segs ? (g.closed() ? 0 : segs) : s);
          piece.emplace_back(p.begin(), p.end());
        }
      }
      piece.push_back(p1);
      double d2 = 0;
      for (std::size_t a = 0; a < piece.size(); ++a)
        for (std::size_t b = a + 1; b < piece.size(); ++b) d2 = std::max(d2, dist2<double>(piece[a], piece[b]));
      r.piece_diameters[j] = std::sqrt(d2);
    }
  }
  r.box_diameters.resize(m * m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      const double dj = r.piece_diameters[j], di = r.piece_diameters[i];
      const double d = std::sqrt(dj * dj + di * di);
      r.box_diameters[j * m + i] = d;
      r.max_delta = std::max(r.max_delta, d);
      r.sum_delta2 += d * d;
    }
  }
  r.delta_bound = std::numbers::sqrt2 * l / static_cast<double>(m);
  r.sum_bound = 2 * l * l;
  r.measure_bound = std::numbers::pi / 4 * r.sum_delta2;
  // relative slack covers rounding in the arc-length cuts only
  r.delta_ok = r.max_delta <= r.delta_bound * (1 + 1e-12);
  r.sum_ok = r.sum_delta2 <= r.sum_bound * (1 + 1e-12);
  return r;
}

template <class T>
Vec<T> ProjectionOp<T>::apply(std::span<const T> x) const {
  Vec<T> y(in_dim - 1);
  for (std::size_t i = 0; i + 1 < in_dim; ++i) y[i] = x[i + 1] - x[0] * w[i];
  return y;
}

template <class T>
PolyCurve<T> ProjectionOp<T>::apply(const PolyCurve<T>& c) const {
  if (c.real_dim() != in_dim) throw DimensionMismatch("projection applied to a map of the wrong dimension");
  std::vector<T> coords;
  coords.reserve(c.size() * (in_dim - 1));
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto y = apply(c.point(i));
    coords.insert(coords.end(), y.begin(), y.end());
  }
  return PolyCurve<T>(in_dim - 1, c.closed(), c.params(), std::move(coords));
}

template <class T>
std::vector<T> ProjectionOp<T>::matrix() const {
  std::vector<T> m((in_dim - 1) * in_dim, T(0));
  for (std::size_t i = 0; i + 1 < in_dim; ++i) {
    m[i * in_dim] = -w[i];
    m[i * in_dim + i + 1] = T(1);
  }
  return m;
}

template <class T>
Projection<T> generic_project(const PolyCurve<T>& sigma, const T& eps, std::uint64_t seed, const Tolerance& tol) {
  const std::size_t k = sigma.real_dim();
  if (k < 4) throw InvalidInput("generic_project needs ambient dimension k >= 4");
  if (!(sign_of(eps) > 0)) throw InvalidInput("eps must be positive");
  if (!is_injective_map(sigma, tol)) throw NotSimple("generic_project needs an injective map");

  SeededRng rng(seed);
  T delta = eps / 2;
  std::string last;
  constexpr int kTrials = 64;
  for (int trial = 0; trial < kTrials; ++trial) {
    ProjectionOp<T> op;
    op.in_dim = k;
    op.trial = trial;
    op.v.assign(k, T(0));
    op.v[0] = T(1);
    if (trial > 0) {
      const auto u = rng.unit_vector(k);
      for (std::size_t i = 0; i < k; ++i) op.v[i] += delta * snap_to<T>(u[i], 30);
    }
    if (!(sign_of(op.v[0]) > 0)) {
      delta = delta / 2;
      continue;
    }
    op.w.resize(k - 1);
    op.deviation2 = T(0);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      op.w[i] = op.v[i + 1] / op.v[0];
      op.deviation2 += op.w[i] * op.w[i];
    }
    if (!(op.deviation2 < eps * eps)) {
      delta = delta / 2;
      continue;
    }
    op.deviation = NumTraits<T>::sqrt(op.deviation2);
    Eigen::MatrixXd tp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i + 1 < k; ++i) tp(static_cast<Eigen::Index>(i), 0) = -to_double(op.w[i]);
    op.svd_deviation = Eigen::JacobiSVD<Eigen::MatrixXd>(tp).singularValues()(0);

    PolyCurve<T> image = op.apply(sigma);
    if (image.has_zero_length_segment()) {
      last = "a segment collapses under the projection";
      continue;
    }
    auto wit = is_simple(image, tol);
    if (wit.simple) return {std::move(op), std::move(image)};
    last = describe_witness(wit);
  }
  throw RetryExhausted("generic_project: no admissible direction in " + std::to_string(kTrials) +
                       " trials; last failure: " + last);
}

template <class T>
InjectiveResult<T> make_injective(const PolyCurve<T>& g, const T& eps, std::uint64_t seed, const Tolerance& tol) {
  if (!(sign_of(eps) > 0)) throw InvalidInput("eps must be positive");
  InjectiveResult<T> r;
  if (is_injective_map(g, tol)) {
    r.map = g;
    r.unchanged = true;
    return r;
  }
  if (g.real_dim() < 3) throw InvalidInput("make_injective needs k >= 3");

  auto record = [&](const PolyCurve<T>& s, const Projection<T>& pr) {
    const double lhs = length_to_double(bv_norm(difference(pr.image, drop_first(s))));
    const double rhs = length_to_double(pr.op.deviation) * length_to_double(bv_norm(s));
    if (lhs > rhs * (1 + 1e-9) + 1e-15) r.budget_ok = false;
    r.stages.push_back(pr.op);
  };

  r.lift = graph_lift(g);
  r.lift_bv = bv_norm(r.lift);
  const T u = upper_bound_of<T>(r.lift_bv);
  if (!g.closed()) {
    auto pr = generic_project(r.lift, T(eps / u), seed, tol);
    record(r.lift, pr);
    r.map = std::move(pr.image);
  } else {
    // out - g = T2 (T1 s - P s) + (T2 - P) P s, and ||T2|| <= 2
    auto p1 = generic_project(r.lift, T(eps / (4 * u)), seed, tol);
    record(r.lift, p1);
    const T u2 = upper_bound_of<T>(bv_norm(drop_first(r.lift)));
    T b2 = eps / (2 * u2);
    if (b2 > T(1)) b2 = T(1);
    auto p2 = generic_project(p1.image, b2, seed + 1, tol);
    record(p1.image, p2);
    r.map = std::move(p2.image);
  }
  r.bv_distance = bv_distance(r.map, g);
  if constexpr (NumTraits<T>::exact) {
    if (!(r.bv_distance < Surd(eps))) throw std::logic_error("make_injective: bv budget violated");
  } else {
    if (!(r.bv_distance < eps)) throw std::logic_error("make_injective: bv budget violated");
  }
  return r;
}

#define PCONVEX_INSTANTIATE(T)                                                                                   \
  template bool is_injective_map<T>(const PolyCurve<T>&, const Tolerance&);                                      \
  template PolyCurve<T> graph_lift<T>(const PolyCurve<T>&);                                                      \
  template CoverReport secant_cover_bound<T>(const PolyCurve<T>&, std::size_t);                                  \
  template struct ProjectionOp<T>;                                                                               \
  template Projection<T> generic_project<T>(const PolyCurve<T>&, const T&, std::uint64_t, const Tolerance&);     \
  template InjectiveResult<T> make_injective<T>(const PolyCurve<T>&, const T&, std::uint64_t, const Tolerance&);

PCONVEX_INSTANTIATE(double)
PCONVEX_INSTANTIATE(Rational)

#undef PCONVEX_INSTANTIATE

}  // namespace pconvex
