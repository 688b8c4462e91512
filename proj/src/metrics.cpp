#include "pconvex/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "pconvex/errors.hpp"

namespace pconvex {

template <class T>
CompactSample<T>::CompactSample(std::size_t d, std::vector<T> c) : dim(d), coords(std::move(c)) {
  if (dim == 0) throw InvalidInput("sample dimension must be positive");
  if (coords.empty() || coords.size() % dim != 0) throw InvalidInput("sample must hold a positive number of points");
  for (const T& x : coords) {
    if constexpr (!NumTraits<T>::exact) {
      if (!std::isfinite(x)) throw InvalidInput("sample coordinates must be finite");
    }
  }
}

template <class T>
CompactSample<T> CompactSample<T>::from_curve(const PolyCurve<T>& c) {
  return CompactSample(c.real_dim(), c.coords());
}

template <class T>
void CompactSample<T>::append(std::span<const T> p) {
  if (dim == 0) dim = p.size();
  if (p.size() != dim) throw DimensionMismatch("appended point has the wrong dimension");
  coords.insert(coords.end(), p.begin(), p.end());
}

namespace {

template <class T>
void check_dims(const CompactSample<T>& a, const CompactSample<T>& b) {
  if (a.size() == 0 || b.size() == 0) throw InvalidInput("Hausdorff distance of an empty sample");
  if (a.dim != b.dim) throw DimensionMismatch("samples differ in dimension");
}

// Uniform bucket grid over the first g <= 3 coordinates.
template <class T>
class Grid {
 public:
  explicit Grid(const CompactSample<T>& b) : b_(b), g_(std::min<std::size_t>(3, b.dim)) {
    double lo[3], hi[3];
    for (std::size_t d = 0; d < g_; ++d) {
      lo[d] = hi[d] = to_double(b.point(0)[d]);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t d = 0; d < g_; ++d) {
        const double x = to_double(b.point(i)[d]);
        lo[d] = std::min(lo[d], x);
        hi[d] = std::max(hi[d], x);
      }
    }
    double extent = 0;
    for (std::size_t d = 0; d < g_; ++d) extent = std::max(extent, hi[d] - lo[d]);
    const double per_axis = std::max(1.0, std::floor(std::pow(static_cast<double>(b.size()), 1.0 / g_)));
    cell_ = extent > 0 ? extent / per_axis : 1.0;
    std::size_t total = 1;
    for (std::size_t d = 0; d < g_; ++d) {
      lo_[d] = lo[d];
      count_[d] = static_cast<long>(std::floor((hi[d] - lo[d]) / cell_)) + 1;
      total *= static_cast<std::size_t>(count_[d]);
    }
    buckets_.resize(total);
    for (std::size_t i = 0; i < b.size(); ++i) {
      long c[3];
      cell_of(b.point(i), c);
      buckets_[flat(c)].push_back(i);
    }
  }

  // Squared distance from x to b, stopping early once it is known to be at
  // most `stop` (the caller only needs values above it).
  T nearest2(std::span<const T> x, const std::optional<T>& stop) const {
    long c[3];
    cell_of(x, c);
    long rmax = 0;
    for (std::size_t d = 0; d < g_; ++d) rmax = std::max({rmax, std::abs(c[d]), std::abs(c[d] - (count_[d] - 1))});
    long r0 = 0;
    for (std::size_t d = 0; d < g_; ++d) r0 = std::max({r0, -c[d], c[d] - (count_[d] - 1)});
    std::optional<T> best;
    for (long r = r0; r <= rmax; ++r) {
      if (best && r > r0) {
        const double lb = (static_cast<double>(r) - 1) * cell_ * (1 - 1e-9);
        if (lb > 0 && lb * lb > to_double(*best) * (1 + 1e-9) + 1e-300) break;
      }
      visit_ring(c, r, [&](std::size_t bucket) {
        for (std::size_t i : buckets_[bucket]) {
          T d2 = dist2<T>(x, b_.point(i));
          if (!best || d2 < *best) best = std::move(d2);
        }
      });
      if (best && stop && *best <= *stop) break;
    }
    return *best;
  }

 private:
  void cell_of(std::span<const T> x, long* c) const {
    for (std::size_t d = 0; d < g_; ++d) c[d] = static_cast<long>(std::floor((to_double(x[d]) - lo_[d]) / cell_));
  }
  std::size_t flat(const long* c) const {
    std::size_t f = 0;
    for (std::size_t d = 0; d < g_; ++d) f = f * static_cast<std::size_t>(count_[d]) + static_cast<std::size_t>(c[d]);
    return f;
  }
  template <class F>
  void visit_ring(const long* c, long r, F&& f) const {
    long lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
    for (std::size_t d = 0; d < g_; ++d) {
      lo[d] = std::max(0L, c[d] - r);
      hi[d] = std::min(count_[d] - 1, c[d] + r);
      if (lo[d] > hi[d]) return;
    }
    long idx[3] = {lo[0], lo[1], lo[2]};
    while (true) {
      long cheb = 0;
      for (std::size_t d = 0; d < g_; ++d) cheb = std::max(cheb, std::abs(idx[d] - c[d]));
      if (cheb == r) f(flat(idx));
      std::size_t d = 0;
      while (d < g_) {
        if (++idx[d] <= hi[d]) break;
        idx[d] = lo[d];
        ++d;
      }
      if (d == g_) break;
    }
  }

  const CompactSample<T>& b_;
  std::size_t g_;
  double lo_[3] = {0, 0, 0};
  long count_[3] = {1, 1, 1};
  double cell_ = 1;
  std::vector<std::vector<std::size_t>> buckets_;
};

template <class T>
T sqrt_free_max(const T& a, const T& b) {
  return a < b ? b : a;
}

}  // namespace

template <class T>
T directed_hausdorff2_brute(const CompactSample<T>& a, const CompactSample<T>& b) {
  check_dims(a, b);
  T worst(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::optional<T> best;
    for (std::size_t j = 0; j < b.size(); ++j) {
      T d2 = dist2<T>(a.point(i), b.point(j));
      if (!best || d2 < *best) best = std::move(d2);
    }
    if (*best > worst) worst = *best;
  }
  return worst;
}

template <class T>
T directed_hausdorff2(const CompactSample<T>& a, const CompactSample<T>& b) {
  check_dims(a, b);
  Grid<T> grid(b);
  std::optional<T> worst;
  for (std::size_t i = 0; i < a.size(); ++i) {
    T d2 = grid.nearest2(a.point(i), worst);
    if (!worst || d2 > *worst) worst = std::move(d2);
  }
  return *worst;
}

template <class T>
Length<T> hausdorff_points(const CompactSample<T>& a, const CompactSample<T>& b) {
  return NumTraits<T>::sqrt(sqrt_free_max(directed_hausdorff2(a, b), directed_hausdorff2(b, a)));
}

template <class T>
Length<T> hausdorff_points_brute(const CompactSample<T>& a, const CompactSample<T>& b) {
  return NumTraits<T>::sqrt(sqrt_free_max(directed_hausdorff2_brute(a, b), directed_hausdorff2_brute(b, a)));
}

template <class T>
T directed_to_polyline2(const CompactSample<T>& a, const PolyCurve<T>& c) {
  if (a.dim != c.real_dim()) throw DimensionMismatch("sample and curve differ in dimension");
  const std::size_t m = c.segment_count();
  T worst(0);
  std::size_t hint = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::optional<T> best;
    // start at the previous winner: neighbouring sample points are usually
    // closest to the same segment, which makes the early exit fire quickly
    const std::size_t start = hint;
    for (std::size_t s = 0; s < std::max<std::size_t>(m, 1); ++s) {
      const std::size_t seg = (start + s) % std::max<std::size_t>(m, 1);
      T d2 = m == 0 ? dist2<T>(a.point(i), c.point(0))
                    : point_segment_dist2<T>(a.point(i), c.point(seg), c.point(c.next(seg))).first;
      if (!best || d2 < *best) {
        best = std::move(d2);
        hint = seg;
      }
      if (*best <= worst) break;
    }
    if (*best > worst) worst = *best;
  }
  return worst;
}

template <class T>
Length<T> hausdorff_polylines(const PolyCurve<T>& a, const PolyCurve<T>& b, const T& h) {
  if (a.real_dim() != b.real_dim()) throw DimensionMismatch("curves differ in dimension");
  if (sign_of(h) <= 0) throw InvalidInput("mesh h must be positive");
  const auto sa = CompactSample<T>::from_curve(refine_to_mesh(a, h));
  const auto sb = CompactSample<T>::from_curve(refine_to_mesh(b, h));
  return NumTraits<T>::sqrt(sqrt_free_max(directed_to_polyline2(sa, b), directed_to_polyline2(sb, a)));
}

template <class T>
Length<T> hausdorff_sample_polyline(const CompactSample<T>& a, const PolyCurve<T>& c, const T& h) {
  if (sign_of(h) <= 0) throw InvalidInput("mesh h must be positive");
  const auto sc = CompactSample<T>::from_curve(refine_to_mesh(c, h));
  return NumTraits<T>::sqrt(sqrt_free_max(directed_to_polyline2(a, c), directed_hausdorff2(sc, a)));
}

#define PCONVEX_INSTANTIATE(T)                                                                     \
  template struct CompactSample<T>;                                                                \
  template T directed_hausdorff2_brute<T>(const CompactSample<T>&, const CompactSample<T>&);       \
  template T directed_hausdorff2<T>(const CompactSample<T>&, const CompactSample<T>&);             \
  template Length<T> hausdorff_points<T>(const CompactSample<T>&, const CompactSample<T>&);        \
  template Length<T> hausdorff_points_brute<T>(const CompactSample<T>&, const CompactSample<T>&);  \
  template T directed_to_polyline2<T>(const CompactSample<T>&, const PolyCurve<T>&);               \
  template Length<T> hausdorff_polylines<T>(const PolyCurve<T>&, const PolyCurve<T>&, const T&);   \
  template Length<T> hausdorff_sample_polyline<T>(const CompactSample<T>&, const PolyCurve<T>&, const T&);

PCONVEX_INSTANTIATE(double)
PCONVEX_INSTANTIATE(Rational)

#undef PCONVEX_INSTANTIATE

}  // namespace pconvex
