#include "pconvex/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pconvex/errors.hpp"

namespace pconvex {

namespace {

template <class T>
bool finite(const T& x) {
  if constexpr (NumTraits<T>::exact) {
    (void)x;
    return true;
  } else {
    return std::isfinite(x);
  }
}

template <class U, class T>
U convert_scalar(const T& x) {
  if constexpr (std::is_same_v<U, T>) {
    return x;
  } else if constexpr (NumTraits<U>::exact) {
    if (!std::isfinite(x)) throw InvalidInput("cannot convert non-finite value to rational");
    return Rational(x);
  } else {
    return x.get_d();
  }
}

template <class T>
T ceil_ratio_pieces(const T& len2, const T& h) {
  // smallest integer k >= 1 with len2 <= h^2 k^2
  double est = std::sqrt(to_double(len2)) / to_double(h);
  long k = std::max(1L, static_cast<long>(std::ceil(est)));
  while (len2 > h * h * T(k) * T(k)) ++k;
  while (k > 1 && len2 <= h * h * T(k - 1) * T(k - 1)) --k;
  return T(k);
}

}  // namespace

template <class T>
PolyCurve<T>::PolyCurve(std::size_t real_dim, bool closed, std::vector<T> params, std::vector<T> coords)
    : dim_(real_dim), closed_(closed), params_(std::move(params)), coords_(std::move(coords)) {
  if (dim_ == 0) throw InvalidInput("curve dimension must be positive");
  const std::size_t m = params_.size();
  if (coords_.size() != m * dim_) {
    std::ostringstream os;
    os << "curve has " << m << " params but " << coords_.size() << " coordinates for dimension " << dim_;
    throw InvalidInput(os.str());
  }
  if (closed_ && m < 3) throw InvalidInput("closed curve needs at least 3 points");
  if (!closed_ && m < 2) throw InvalidInput("open curve needs at least 2 points");
  for (std::size_t i = 0; i < m; ++i) {
    if (!finite(params_[i])) throw InvalidInput("non-finite parameter");
    if (params_[i] < T(0) || (closed_ ? params_[i] >= T(1) : params_[i] > T(1))) {
      throw InvalidInput(closed_ ? "closed-curve parameters must lie in [0,1)" : "open-curve parameters must lie in [0,1]");
    }
    if (i > 0 && !(params_[i - 1] < params_[i])) throw InvalidInput("parameters must be strictly increasing");
  }
  for (const auto& x : coords_) {
    if (!finite(x)) throw InvalidInput("non-finite coordinate");
  }
}

template <class T>
PolyCurve<T> PolyCurve<T>::from_points(std::size_t real_dim, bool closed, std::vector<T> coords) {
  if (real_dim == 0 || coords.size() % real_dim != 0) throw InvalidInput("coordinate count not a multiple of dimension");
  const std::size_t m = coords.size() / real_dim;
  if (m < 2) throw InvalidInput("curve needs at least 2 points");
  std::vector<T> params(m);
  const long denom = closed ? static_cast<long>(m) : static_cast<long>(m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    if constexpr (NumTraits<T>::exact) {
      params[i] = Rational(static_cast<long>(i), denom);
      params[i].canonicalize();
    } else {
      params[i] = static_cast<double>(i) / static_cast<double>(denom);
    }
  }
  return PolyCurve(real_dim, closed, std::move(params), std::move(coords));
}

template <class T>
std::size_t PolyCurve<T>::complex_dim() const {
  if (dim_ % 2 != 0) throw DimensionMismatch("curve has odd real dimension; not a curve in C^n");
  return dim_ / 2;
}

template <class T>
T PolyCurve<T>::segment_span(std::size_t i) const {
  if (i + 1 < size()) return params_[i + 1] - params_[i];
  return params_.front() + T(1) - params_.back();
}

template <class T>
Vec<T> PolyCurve<T>::at(const T& t_in) const {
  T t = t_in;
  const std::size_t m = size();
  if (closed_) {
    if (t < params_.front()) t += T(1);
    if (t >= params_.back()) {
      T s = (t - params_.back()) / segment_span(m - 1);
      return lerp<T>(point(m - 1), point(0), s);
    }
  } else {
    if (t <= params_.front()) return Vec<T>(point(0).begin(), point(0).end());
    if (t >= params_.back()) return Vec<T>(point(m - 1).begin(), point(m - 1).end());
  }
  auto it = std::upper_bound(params_.begin(), params_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - params_.begin()) - 1;
  if (params_[i] == t) return Vec<T>(point(i).begin(), point(i).end());
  T s = (t - params_[i]) / (params_[i + 1] - params_[i]);
  return lerp<T>(point(i), point(i + 1), s);
}

template <class T>
bool PolyCurve<T>::has_zero_length_segment() const {
  for (std::size_t i = 0; i < segment_count(); ++i) {
    if (sign_of(dist2<T>(point(i), point(next(i)))) == 0) return true;
  }
  return false;
}

template <class T>
PolyCurve<T> PolyCurve<T>::reversed() const {
  const std::size_t m = size();
  std::vector<std::pair<T, std::size_t>> order;
  order.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    T t = T(1) - params_[i];
    if (closed_ && t >= T(1)) t -= T(1);
    order.emplace_back(t, i);
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<T> params;
  std::vector<T> coords;
  params.reserve(m);
  coords.reserve(m * dim_);
  for (const auto& [t, i] : order) {
    params.push_back(t);
    auto p = point(i);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PolyCurve(dim_, closed_, std::move(params), std::move(coords));
}

template <class T>
template <class U>
PolyCurve<U> PolyCurve<T>::convert() const {
  std::vector<U> params;
  std::vector<U> coords;
  params.reserve(params_.size());
  coords.reserve(coords_.size());
  for (const auto& t : params_) params.push_back(convert_scalar<U>(t));
  for (const auto& x : coords_) coords.push_back(convert_scalar<U>(x));
  return PolyCurve<U>(dim_, closed_, std::move(params), std::move(coords));
}

// ---- geometry ------------------------------------------------------------

template <class T>
std::pair<T, T> point_segment_dist2(std::span<const T> x, std::span<const T> p, std::span<const T> q) {
  Vec<T> d = sub<T>(q, p);
  Vec<T> w = sub<T>(x, p);
  T dd = dot<T>(d, d);
  T s(0);
  if (sign_of(dd) > 0) {
    s = dot<T>(w, d) / dd;
    if (s < T(0)) s = T(0);
    if (s > T(1)) s = T(1);
  }
  T out(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    T r = w[i] - s * d[i];
    out += r * r;
  }
  return {out, s};
}

template <class T>
SegmentDistance<T> segment_segment_dist2(std::span<const T> p1, std::span<const T> q1, std::span<const T> p2,
                                         std::span<const T> q2) {
  // Closest points of two segments by clamped minimisation of the quadratic
  // |p1 + s d1 - p2 - t d2|^2 over [0,1]^2.
  Vec<T> d1 = sub<T>(q1, p1);
  Vec<T> d2 = sub<T>(q2, p2);
  Vec<T> r = sub<T>(p1, p2);
  const T a = dot<T>(d1, d1);
  const T e = dot<T>(d2, d2);
  const T f = dot<T>(d2, r);
  const T c = dot<T>(d1, r);
  const T b = dot<T>(d1, d2);
  const T denom = a * e - b * b;
  auto clamp01 = [](T v) {
    if (v < T(0)) return T(0);
    if (v > T(1)) return T(1);
    return v;
  };
  T s(0);
  if (sign_of(denom) != 0) s = clamp01((b * f - c * e) / denom);
  T t = (b * s + f) / e;
  if (t < T(0)) {
    t = T(0);
    s = clamp01(-c / a);
  } else if (t > T(1)) {
    t = T(1);
    s = clamp01((b - c) / a);
  }
  T out(0);
  for (std::size_t i = 0; i < d1.size(); ++i) {
    T v = r[i] + s * d1[i] - t * d2[i];
    out += v * v;
  }
  return {out, s, t};
}

template <class T>
T point_curve_dist2(std::span<const T> x, const PolyCurve<T>& c) {
  T best = point_segment_dist2<T>(x, c.point(0), c.point(c.next(0))).first;
  for (std::size_t i = 1; i < c.segment_count(); ++i) {
    T d = point_segment_dist2<T>(x, c.point(i), c.point(c.next(i))).first;
    if (d < best) best = d;
  }
  return best;
}

// ---- norms ---------------------------------------------------------------

template <class T>
Length<T> total_variation(const PolyCurve<T>& c) {
  Length<T> total(0);
  for (std::size_t i = 0; i < c.segment_count(); ++i) {
    total += NumTraits<T>::sqrt(dist2<T>(c.point(i), c.point(c.next(i))));
  }
  return total;
}

template <class T>
Length<T> sup_norm(const PolyCurve<T>& c) {
  T best(0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto p = c.point(i);
    T n = dot<T>(p, p);
    if (n > best) best = n;
  }
  return NumTraits<T>::sqrt(best);
}

template <class T>
Length<T> bv_norm(const PolyCurve<T>& c) {
  return sup_norm(c) + total_variation(c);
}

template <class T>
PolyCurve<T> difference(const PolyCurve<T>& a, const PolyCurve<T>& b) {
  if (a.real_dim() != b.real_dim()) throw DimensionMismatch("curves have different dimensions");
  if (a.closed() != b.closed()) throw DomainError("cannot compare a closed curve with an open one");
  std::vector<T> params;
  params.reserve(a.size() + b.size());
  std::merge(a.params().begin(), a.params().end(), b.params().begin(), b.params().end(), std::back_inserter(params));
  params.erase(std::unique(params.begin(), params.end()), params.end());
  std::vector<T> coords;
  coords.reserve(params.size() * a.real_dim());
  for (const auto& t : params) {
    Vec<T> pa = a.at(t);
    Vec<T> pb = b.at(t);
    for (std::size_t i = 0; i < pa.size(); ++i) coords.push_back(pa[i] - pb[i]);
  }
  return PolyCurve<T>(a.real_dim(), a.closed(), std::move(params), std::move(coords));
}

template <class T>
Length<T> sup_distance(const PolyCurve<T>& a, const PolyCurve<T>& b) {
  return sup_norm(difference(a, b));
}

template <class T>
Length<T> bv_distance(const PolyCurve<T>& a, const PolyCurve<T>& b) {
  return bv_norm(difference(a, b));
}

template <class T>
PolyCurve<T> refine(const PolyCurve<T>& c, std::vector<T> extra) {
  if (extra.empty()) return c;
  std::sort(extra.begin(), extra.end());
  for (std::size_t i = 0; i < extra.size(); ++i) {
    const T& t = extra[i];
    if (i > 0 && extra[i - 1] == t) throw InvalidInput("duplicate refinement parameter");
    if (std::binary_search(c.params().begin(), c.params().end(), t)) {
      throw InvalidInput("refinement parameter duplicates an existing breakpoint");
    }
    if (c.closed()) {
      if (t < T(0) || t >= T(1)) throw InvalidInput("refinement parameter outside [0,1)");
    } else if (t < c.params().front() || t > c.params().back()) {
      throw InvalidInput("refinement parameter outside the curve's parameter range");
    }
  }
  std::vector<T> params;
  std::merge(c.params().begin(), c.params().end(), extra.begin(), extra.end(), std::back_inserter(params));
  std::vector<T> coords;
  coords.reserve(params.size() * c.real_dim());
  for (const auto& t : params) {
    Vec<T> p = c.at(t);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PolyCurve<T>(c.real_dim(), c.closed(), std::move(params), std::move(coords));
}

template <class T>
PolyCurve<T> refine_to_mesh(const PolyCurve<T>& c, const T& h) {
  if (!(h > T(0))) throw InvalidInput("mesh size must be positive");
  std::vector<T> extra;
  for (std::size_t i = 0; i < c.segment_count(); ++i) {
    T len2 = dist2<T>(c.point(i), c.point(c.next(i)));
    T pieces = ceil_ratio_pieces(len2, h);
    const long k = static_cast<long>(to_double(pieces) + 0.5);
    const T span = c.segment_span(i);
    for (long j = 1; j < k; ++j) {
      T t = c.param(i) + span * T(j) / pieces;
      if (c.closed() && t >= T(1)) t -= T(1);
      extra.push_back(t);
    }
  }
  return refine(c, std::move(extra));
}

template <class T>
double mesh_size(const PolyCurve<T>& c) {
  double best = 0.0;
  for (std::size_t i = 0; i < c.segment_count(); ++i) {
    best = std::max(best, std::sqrt(to_double(dist2<T>(c.point(i), c.point(c.next(i))))));
  }
  return best;
}

// ---- simplicity ----------------------------------------------------------

namespace {

template <class T>
T global_param(const PolyCurve<T>& c, std::size_t seg, const T& s) {
  T t = c.param(seg) + s * c.segment_span(seg);
  if (c.closed() && t >= T(1)) t -= T(1);
  return t;
}

template <class T>
bool adjacent(const PolyCurve<T>& c, std::size_t i, std::size_t j) {
  if (j == i + 1) return true;
  return c.closed() && i == 0 && j + 1 == c.segment_count();
}

// Adjacent segments `first` (ending at the shared vertex) and `second`
// (starting there) overlap beyond the vertex iff they are anti-parallel.
template <class T>
std::optional<std::pair<T, T>> fold_back(const PolyCurve<T>& c, std::size_t first, std::size_t second,
                                         const Tolerance& tol) {
  auto p = c.point(first);
  auto v = c.point(c.next(first));
  auto q = c.point(c.next(second));
  Vec<T> d1 = sub<T>(v, p);
  Vec<T> d2 = sub<T>(q, v);
  T a = dot<T>(d1, d1);
  T e = dot<T>(d2, d2);
  T b = dot<T>(d1, d2);
  if (!(b < T(0))) return std::nullopt;
  T cross = a * e - b * b;
  if (!is_zero(cross, to_double(a) * to_double(e), tol)) return std::nullopt;
  if (e <= a) {
    // q lies on the first segment
    Vec<T> w = sub<T>(q, p);
    T s = dot<T>(w, d1) / a;
    return std::pair<T, T>{global_param(c, first, s), global_param(c, second, T(1))};
  }
  // p lies on the second segment
  Vec<T> w = sub<T>(p, v);
  T s = dot<T>(w, d2) / e;
  return std::pair<T, T>{global_param(c, first, T(0)), global_param(c, second, s)};
}

template <class T>
std::optional<std::pair<T, T>> test_pair(const PolyCurve<T>& c, std::size_t i, std::size_t j, const Tolerance& tol) {
  if (adjacent(c, i, j)) {
    if (j == i + 1) return fold_back(c, i, j, tol);
    auto r = fold_back(c, j, i, tol);  // wrap: j ends where i starts
    if (r) return std::pair<T, T>{r->second, r->first};
    return std::nullopt;
  }
  auto sd = segment_segment_dist2<T>(c.point(i), c.point(c.next(i)), c.point(j), c.point(c.next(j)));
  double scale = std::max(to_double(dist2<T>(c.point(i), c.point(c.next(i)))),
                          to_double(dist2<T>(c.point(j), c.point(c.next(j)))));
  if (!is_zero(sd.dist2, scale * tol.tau, tol)) return std::nullopt;
  return std::pair<T, T>{global_param(c, i, sd.s), global_param(c, j, sd.t)};
}

template <class T>
void require_nondegenerate(const PolyCurve<T>& c) {
  for (std::size_t i = 0; i < c.segment_count(); ++i) {
    if (sign_of(dist2<T>(c.point(i), c.point(c.next(i)))) == 0) {
      throw DegenerateSegment("zero-length segment " + std::to_string(i) + " in a curve that must be injective");
    }
  }
}

template <class T>
SimplicityWitness<T> make_witness(std::size_t i, std::size_t j, std::pair<T, T> params) {
  SimplicityWitness<T> w;
  w.simple = false;
  w.segments = std::pair<std::size_t, std::size_t>{i, j};
  w.crossing = std::move(params);
  return w;
}

}  // namespace

template <class T>
SimplicityWitness<T> is_simple_naive(const PolyCurve<T>& c, const Tolerance& tol) {
  require_nondegenerate(c);
  const std::size_t n = c.segment_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (auto hit = test_pair(c, i, j, tol)) return make_witness(i, j, std::move(*hit));
    }
  }
  return {};
}

template <class T>
SimplicityWitness<T> is_simple(const PolyCurve<T>& c, const Tolerance& tol) {
  require_nondegenerate(c);
  const std::size_t n = c.segment_count();
  const std::size_t k = c.real_dim();
  std::vector<T> lo(n * k);
  std::vector<T> hi(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = c.point(i);
    auto q = c.point(c.next(i));
    // Float mode pads boxes by the zero-distance tolerance so that the sweep
    // never skips a pair the all-pairs test would flag.
    T pad(0);
    if constexpr (!NumTraits<T>::exact) pad = 2.0 * tol.tau * std::sqrt(dist2<T>(p, q)) + 1e-300;
    for (std::size_t d = 0; d < k; ++d) {
      bool le = p[d] <= q[d];
      lo[i * k + d] = (le ? p[d] : q[d]) - pad;
      hi[i * k + d] = (le ? q[d] : p[d]) + pad;
    }
  }
  std::optional<std::pair<std::size_t, std::size_t>> best;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (best && std::pair{i, j} >= *best) return;
    if (test_pair(c, i, j, tol)) best = std::pair{i, j};
  };
  for (std::size_t i = 0; i + 1 < n; ++i) consider(i, i + 1);
  if (c.closed() && n >= 3) consider(0, n - 1);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lo[a * k] != lo[b * k]) return lo[a * k] < lo[b * k];
    return a < b;
  });
  for (std::size_t oi = 0; oi < n; ++oi) {
    const std::size_t i = order[oi];
    for (std::size_t oj = oi + 1; oj < n; ++oj) {
      const std::size_t j = order[oj];
      if (lo[j * k] > hi[i * k]) break;
      if (adjacent(c, std::min(i, j), std::max(i, j))) continue;
      bool overlap = true;
      for (std::size_t d = 1; d < k && overlap; ++d) {
        overlap = !(lo[j * k + d] > hi[i * k + d] || lo[i * k + d] > hi[j * k + d]);
      }
      if (overlap) consider(i, j);
    }
  }
  if (!best) return {};
  auto hit = test_pair(c, best->first, best->second, tol);
  return make_witness(best->first, best->second, std::move(*hit));
}

template <class T>
void require_simple(const PolyCurve<T>& c, const char* what, const Tolerance& tol) {
  auto w = is_simple(c, tol);
  if (!w.simple) {
    std::ostringstream os;
    os << what << " is not simple: segments " << w.segments->first << " and " << w.segments->second << " meet at t = "
       << to_double(w.crossing->first) << ", " << to_double(w.crossing->second);
    throw NotSimple(os.str());
  }
}

#define PCONVEX_INSTANTIATE(T)                                                                              \
  template class PolyCurve<T>;                                                                              \
  template PolyCurve<double> PolyCurve<T>::convert<double>() const;                                         \
  template PolyCurve<Rational> PolyCurve<T>::convert<Rational>() const;                                     \
  template std::pair<T, T> point_segment_dist2<T>(std::span<const T>, std::span<const T>, std::span<const T>); \
  template SegmentDistance<T> segment_segment_dist2<T>(std::span<const T>, std::span<const T>,             \
                                                       std::span<const T>, std::span<const T>);            \
  template T point_curve_dist2<T>(std::span<const T>, const PolyCurve<T>&);                                 \
  template Length<T> total_variation<T>(const PolyCurve<T>&);                                               \
  template Length<T> sup_norm<T>(const PolyCurve<T>&);                                                      \
  template Length<T> bv_norm<T>(const PolyCurve<T>&);                                                       \
  template PolyCurve<T> difference<T>(const PolyCurve<T>&, const PolyCurve<T>&);                            \
  template Length<T> sup_distance<T>(const PolyCurve<T>&, const PolyCurve<T>&);                             \
  template Length<T> bv_distance<T>(const PolyCurve<T>&, const PolyCurve<T>&);                              \
  template PolyCurve<T> refine<T>(const PolyCurve<T>&, std::vector<T>);                                     \
  template PolyCurve<T> refine_to_mesh<T>(const PolyCurve<T>&, const T&);                                   \
  template double mesh_size<T>(const PolyCurve<T>&);                                                        \
  template SimplicityWitness<T> is_simple<T>(const PolyCurve<T>&, const Tolerance&);                        \
  template SimplicityWitness<T> is_simple_naive<T>(const PolyCurve<T>&, const Tolerance&);                  \
  template void require_simple<T>(const PolyCurve<T>&, const char*, const Tolerance&);

PCONVEX_INSTANTIATE(double)
PCONVEX_INSTANTIATE(Rational)

#undef PCONVEX_INSTANTIATE

}  // namespace pconvex
