#pragma once

#include <cstdint>

#include "pconvex/curve.hpp"
#include "pconvex/random.hpp"

namespace pconvex {

/// Vertices of a regular N-gon of the given radius, coordinates snapped to
/// 2^-bits in exact mode. Planar, counterclockwise, first vertex on the
/// positive real axis.
template <class T>
PolyCurve<T> regular_polygon(std::size_t n, double radius = 1.0, int bits = 30);

/// The N-gon with vertices (w^k, conj(w)^k) in C^2, w = exp(2 pi i / N).
template <class T>
PolyCurve<T> conjugate_polygon(std::size_t n, int bits = 30);

/// The N-gon with vertices (w^k, w^k) inside the complex line z1 = z2.
template <class T>
PolyCurve<T> diagonal_polygon(std::size_t n, int bits = 30);

/// Planar closed curve (z) regarded in C^n via z -> (z, L_2(z), ..., L_n(z)),
/// with L_j real-affine maps; injective since the first coordinate is.
template <class T>
PolyCurve<T> lift_planar(const PolyCurve<T>& planar, std::size_t n, SeededRng& rng, int bits = 30);

/// Star-shaped planar polygon with m vertices at increasing angles and
/// radii in [r_min, r_max]; simple by construction.
template <class T>
PolyCurve<T> random_star_polygon(std::size_t m, SeededRng& rng, double r_min = 0.5, double r_max = 1.5, int bits = 30);

/// Arbitrary closed polyline in C^n with m vertices in [-1,1]^{2n}
/// (not necessarily simple).
template <class T>
PolyCurve<T> random_closed_polyline(std::size_t n, std::size_t m, SeededRng& rng, int bits = 30);

}  // namespace pconvex
