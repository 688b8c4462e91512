#pragma once

#include "pconvex/curve.hpp"

namespace pconvex {

/// Finite point cloud in R^k standing in for a compact set.
template <class T>
struct CompactSample {
  std::size_t dim = 0;
  std::vector<T> coords;

  CompactSample() = default;
  CompactSample(std::size_t dim, std::vector<T> coords);
  static CompactSample from_curve(const PolyCurve<T>& c);

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
  std::span<const T> point(std::size_t i) const { return {coords.data() + i * dim, dim}; }
  void append(std::span<const T> p);
};

/// max_a min_b |a - b|^2, all pairs.
template <class T>
T directed_hausdorff2_brute(const CompactSample<T>& a, const CompactSample<T>& b);

/// Same value, bucketing b on a uniform grid over its first (up to three)
/// coordinates and scanning rings of cells outward.
template <class T>
T directed_hausdorff2(const CompactSample<T>& a, const CompactSample<T>& b);

template <class T>
Length<T> hausdorff_points(const CompactSample<T>& a, const CompactSample<T>& b);
template <class T>
Length<T> hausdorff_points_brute(const CompactSample<T>& a, const CompactSample<T>& b);

/// max over points of a of the squared distance to the image of c.
template <class T>
T directed_to_polyline2(const CompactSample<T>& a, const PolyCurve<T>& c);

/// Hausdorff distance between the images of two polylines, from the vertices
/// of h-refinements to the other polyline. The result V satisfies
/// d_H - h/2 <= V <= d_H.
template <class T>
Length<T> hausdorff_polylines(const PolyCurve<T>& a, const PolyCurve<T>& b, const T& h);

/// Sample-to-polyline Hausdorff distance with the polyline refined to h
/// (error at most h/2).
template <class T>
Length<T> hausdorff_sample_polyline(const CompactSample<T>& a, const PolyCurve<T>& c, const T& h);

}  // namespace pconvex
