#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pconvex/number.hpp"

namespace pconvex {

// Piecewise-linear map from [0,1] (open) or the circle [0,1) (closed) into
// R^k. Complex curves in C^n are stored with k = 2n as (re1, im1, ..., ren, imn).
// The map is affine on every parameter cell; closed curves wrap from the last
// point back to the first over [t_{m-1}, t_0 + 1].
template <class T>
class PolyCurve {
 public:
  PolyCurve() = default;
  /// Validates shape, parameter ordering and finiteness. Throws InvalidInput.
  PolyCurve(std::size_t real_dim, bool closed, std::vector<T> params, std::vector<T> coords);

  /// Uniform parameters i/m (closed) or i/(m-1) (open).
  static PolyCurve from_points(std::size_t real_dim, bool closed, std::vector<T> coords);

  std::size_t real_dim() const { return dim_; }
  /// Complex dimension; throws if the real dimension is odd.
  std::size_t complex_dim() const;
  bool closed() const { return closed_; }
  std::size_t size() const { return params_.size(); }
  std::size_t segment_count() const { return closed_ ? size() : size() - 1; }

  const T& param(std::size_t i) const { return params_[i]; }
  const std::vector<T>& params() const { return params_; }
  std::span<const T> point(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
  const std::vector<T>& coords() const { return coords_; }
  Complex<T> z(std::size_t i, std::size_t j) const {
    return Complex<T>(coords_[i * dim_ + 2 * j], coords_[i * dim_ + 2 * j + 1]);
  }

  /// Index of the segment end point (wraps for closed curves).
  std::size_t next(std::size_t i) const { return i + 1 == size() ? 0 : i + 1; }
  /// Parameter length of segment i (the wrap segment spans t_0 + 1 - t_{m-1}).
  T segment_span(std::size_t i) const;

  Vec<T> at(const T& t) const;

  bool has_zero_length_segment() const;
  /// Same curve traversed backwards; params become 1 - t (closed curves are
  /// re-anchored so the parameter domain stays [0,1)).
  PolyCurve reversed() const;

  template <class U>
  PolyCurve<U> convert() const;

  friend bool operator==(const PolyCurve& a, const PolyCurve& b) {
    return a.dim_ == b.dim_ && a.closed_ == b.closed_ && a.params_ == b.params_ && a.coords_ == b.coords_;
  }

 private:
  std::size_t dim_ = 0;
  bool closed_ = false;
  std::vector<T> params_;
  std::vector<T> coords_;
};

// ---- vector helpers ------------------------------------------------------

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
T dist2(std::span<const T> a, std::span<const T> b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    T d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

template <class T>
Vec<T> sub(std::span<const T> a, std::span<const T> b) {
  Vec<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

template <class T>
Vec<T> lerp(std::span<const T> a, std::span<const T> b, const T& s) {
  Vec<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * (b[i] - a[i]);
  return out;
}

/// Squared distance from x to the segment [p, q] and the clamped parameter.
template <class T>
std::pair<T, T> point_segment_dist2(std::span<const T> x, std::span<const T> p, std::span<const T> q);

/// Squared distance between segments [p1,q1] and [p2,q2] in any dimension,
/// together with the parameters of a closest pair. Uses only field operations,
/// so it is exact over the rationals. Segments must have positive length.
template <class T>
struct SegmentDistance {
  T dist2;
  T s;  // on the first segment
  T t;  // on the second segment
};

template <class T>
SegmentDistance<T> segment_segment_dist2(std::span<const T> p1, std::span<const T> q1, std::span<const T> p2,
                                         std::span<const T> q2);

/// Squared distance from x to the image of the polyline.
template <class T>
T point_curve_dist2(std::span<const T> x, const PolyCurve<T>& c);

// ---- norms ---------------------------------------------------------------

/// Sum of Euclidean segment lengths, including the wrap segment.
template <class T>
Length<T> total_variation(const PolyCurve<T>& c);

/// max over breakpoints of |c(t)|.
template <class T>
Length<T> sup_norm(const PolyCurve<T>& c);

template <class T>
Length<T> bv_norm(const PolyCurve<T>& c);

/// Pointwise difference a(t) - b(t) sampled on the union of both parameter sets.
template <class T>
PolyCurve<T> difference(const PolyCurve<T>& a, const PolyCurve<T>& b);

/// max_t |a(t) - b(t)|; exact since the difference is affine between union breakpoints.
template <class T>
Length<T> sup_distance(const PolyCurve<T>& a, const PolyCurve<T>& b);

/// bv_norm(a - b).
template <class T>
Length<T> bv_distance(const PolyCurve<T>& a, const PolyCurve<T>& b);

/// Inserts breakpoints without changing the map. Throws on duplicates or
/// parameters outside the domain.
template <class T>
PolyCurve<T> refine(const PolyCurve<T>& c, std::vector<T> extra_params);

/// Splits every segment into equal pieces no longer than h.
template <class T>
PolyCurve<T> refine_to_mesh(const PolyCurve<T>& c, const T& h);

/// Longest segment length (float estimate).
template <class T>
double mesh_size(const PolyCurve<T>& c);

// ---- simplicity ----------------------------------------------------------

template <class T>
struct SimplicityWitness {
  bool simple = true;
  // Segment indices and the parameters of a common image point.
  std::optional<std::pair<std::size_t, std::size_t>> segments;
  std::optional<std::pair<T, T>> crossing;
};

/// Exact injectivity test: non-adjacent segments disjoint, adjacent segments
/// meeting only at their shared vertex. Uses sweep-and-prune on the first
/// coordinate. Reports the lexicographically first offending segment pair.
/// Throws DegenerateSegment if a segment has zero length.
template <class T>
SimplicityWitness<T> is_simple(const PolyCurve<T>& c, const Tolerance& tol = {});

/// All-pairs reference implementation of is_simple.
template <class T>
SimplicityWitness<T> is_simple_naive(const PolyCurve<T>& c, const Tolerance& tol = {});

/// Throws NotSimple / DegenerateSegment unless c is simple.
template <class T>
void require_simple(const PolyCurve<T>& c, const char* what, const Tolerance& tol = {});

}  // namespace pconvex
