#include "pconvex/shapes.hpp"

#include <cmath>
#include <numbers>

#include "pconvex/errors.hpp"

namespace pconvex {

template <class T>
PolyCurve<T> regular_polygon(std::size_t n, double radius, int bits) {
  if (n < 3) throw InvalidInput("polygon needs at least 3 vertices");
  std::vector<T> coords;
  for (std::size_t k = 0; k < n; ++k) {
    const double th = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    coords.push_back(snap_to<T>(radius * std::cos(th), bits));
    coords.push_back(snap_to<T>(radius * std::sin(th), bits));
  }
  return PolyCurve<T>::from_points(2, true, std::move(coords));
}

template <class T>
PolyCurve<T> conjugate_polygon(std::size_t n, int bits) {
  const PolyCurve<T> p = regular_polygon<T>(n, 1.0, bits);
  std::vector<T> coords;
  for (std::size_t k = 0; k < n; ++k) {
    const auto z = p.point(k);
    coords.insert(coords.end(), {z[0], z[1], z[0], T(-z[1])});
  }
  return PolyCurve<T>::from_points(4, true, std::move(coords));
}

template <class T>
PolyCurve<T> diagonal_polygon(std::size_t n, int bits) {
  const PolyCurve<T> p = regular_polygon<T>(n, 1.0, bits);
  std::vector<T> coords;
  for (std::size_t k = 0; k < n; ++k) {
    const auto z = p.point(k);
    coords.insert(coords.end(), {z[0], z[1], z[0], z[1]});
  }
  return PolyCurve<T>::from_points(4, true, std::move(coords));
}

template <class T>
PolyCurve<T> lift_planar(const PolyCurve<T>& planar, std::size_t n, SeededRng& rng, int bits) {
  if (planar.real_dim() != 2) throw DimensionMismatch("lift_planar expects a planar curve");
  if (n < 1) throw InvalidInput("complex dimension must be positive");
  // rows of 2x3 real-affine maps for each extra coordinate
  std::vector<T> maps;
  for (std::size_t j = 1; j < n; ++j) {
    for (int r = 0; r < 6; ++r) maps.push_back(snap_to<T>(rng.uniform(-1, 1), bits / 2));
  }
  std::vector<T> coords;
  for (std::size_t i = 0; i < planar.size(); ++i) {
    const auto z = planar.point(i);
    coords.push_back(z[0]);
    coords.push_back(z[1]);
    for (std::size_t j = 1; j < n; ++j) {
      const T* m = &maps[6 * (j - 1)];
      coords.push_back(m[0] * z[0] + m[1] * z[1] + m[2]);
      coords.push_back(m[3] * z[0] + m[4] * z[1] + m[5]);
    }
  }
  return PolyCurve<T>(2 * n, planar.closed(), planar.params(), std::move(coords));
}

template <class T>
PolyCurve<T> random_star_polygon(std::size_t m, SeededRng& rng, double r_min, double r_max, int bits) {
  if (m < 3) throw InvalidInput("polygon needs at least 3 vertices");
  std::vector<T> coords;
  for (std::size_t k = 0; k < m; ++k) {
    // jitter inside the k-th angular sector keeps angles strictly increasing
    const double th = 2 * std::numbers::pi * (static_cast<double>(k) + rng.uniform(0.1, 0.9)) / static_cast<double>(m);
    const double r = rng.uniform(r_min, r_max);
    coords.push_back(snap_to<T>(r * std::cos(th), bits));
    coords.push_back(snap_to<T>(r * std::sin(th), bits));
  }
  return PolyCurve<T>::from_points(2, true, std::move(coords));
}

template <class T>
PolyCurve<T> random_closed_polyline(std::size_t n, std::size_t m, SeededRng& rng, int bits) {
  if (m < 3) throw InvalidInput("closed polyline needs at least 3 vertices");
  std::vector<T> coords;
  for (std::size_t i = 0; i < 2 * n * m; ++i) coords.push_back(snap_to<T>(rng.uniform(-1, 1), bits));
  return PolyCurve<T>::from_points(2 * n, true, std::move(coords));
}

#define PCONVEX_INSTANTIATE(T)                                                                   \
  template PolyCurve<T> regular_polygon<T>(std::size_t, double, int);                            \
  template PolyCurve<T> conjugate_polygon<T>(std::size_t, int);                                  \
  template PolyCurve<T> diagonal_polygon<T>(std::size_t, int);                                   \
  template PolyCurve<T> lift_planar<T>(const PolyCurve<T>&, std::size_t, SeededRng&, int);       \
  template PolyCurve<T> random_star_polygon<T>(std::size_t, SeededRng&, double, double, int);    \
  template PolyCurve<T> random_closed_polyline<T>(std::size_t, std::size_t, SeededRng&, int);

PCONVEX_INSTANTIATE(double)
PCONVEX_INSTANTIATE(Rational)

#undef PCONVEX_INSTANTIATE

}  // namespace pconvex
