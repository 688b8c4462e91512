#pragma once

#include <cstdint>
#include <vector>

#include "pconvex/curve.hpp"

namespace pconvex {

// A bounded-variation map into R^k is stored as a PolyCurve in real
// coordinates: open curves live on the interval [0,1], closed ones on the
// circle R/Z. Constant pieces (repeated points) are allowed.
enum class MapDomain { interval, circle };

template <class T>
MapDomain domain_of(const PolyCurve<T>& m) {
  return m.closed() ? MapDomain::circle : MapDomain::interval;
}

/// Injectivity of the map: no constant pieces, no fold-backs and a simple
/// image.
template <class T>
bool is_injective_map(const PolyCurve<T>& m, const Tolerance& tol = {});

/// x -> (x, g(x)) on the interval; theta -> (cos 2 pi theta, sin 2 pi theta, g(theta))
/// on the circle. In rational mode the circle factor uses exact rational
/// points of the unit circle at (approximately) the same angles.
template <class T>
PolyCurve<T> graph_lift(const PolyCurve<T>& g);

struct CoverReport {
  std::size_t m = 0;
  double length = 0;
  std::vector<double> piece_diameters;
  std::vector<double> box_diameters;  // row-major m x m, diam(g_j x g_k)
  double max_delta = 0;
  double delta_bound = 0;  // sqrt(2) l / m
  double sum_delta2 = 0;
  double sum_bound = 0;    // 2 l^2
  double measure_bound = 0;  // (pi/4) sum delta^2
  bool delta_ok = false;
  bool sum_ok = false;
  bool holds() const { return delta_ok && sum_ok; }
};

/// Splits the domain into m pieces of equal arc length and bounds the
/// diameters of the m^2 product boxes covering g x g.
template <class T>
CoverReport secant_cover_bound(const PolyCurve<T>& g, std::size_t m);

// T = P o T_v, where T_v projects along span{v} onto {0} x R^{k-1} and P
// drops the first coordinate. Then T - P has the single nonzero column -w,
// w = (v_2, ..., v_k) / v_1, so ||T - P|| = |w|.
template <class T>
struct ProjectionOp {
  std::size_t in_dim = 0;
  Vec<T> v;
  Vec<T> w;
  T deviation2{0};
  Length<T> deviation{};
  double svd_deviation = 0;  // largest singular value of T - P, floating point
  int trial = 0;

  Vec<T> apply(std::span<const T> x) const;
  PolyCurve<T> apply(const PolyCurve<T>& c) const;
  /// Row-major (k-1) x k matrix of T.
  std::vector<T> matrix() const;
};

template <class T>
struct Projection {
  ProjectionOp<T> op;
  PolyCurve<T> image;
};

/// Seeded search for v near e_1 with T o sigma injective and ||T - P|| < eps.
/// Trial 0 is v = e_1 itself. Throws RetryExhausted after 64 trials.
template <class T>
Projection<T> generic_project(const PolyCurve<T>& sigma, const T& eps, std::uint64_t seed, const Tolerance& tol = {});

template <class T>
struct InjectiveResult {
  PolyCurve<T> map;
  bool unchanged = false;
  std::vector<ProjectionOp<T>> stages;
  PolyCurve<T> lift;
  Length<T> lift_bv{};
  Length<T> bv_distance{};
  bool budget_ok = true;  // ||T o s - P o s||_bv <= ||T - P|| ||s||_bv at every stage
};

/// Injective map within eps of g in bv norm: graph lift followed by one
/// (interval) or two (circle) generic projections. k >= 3.
template <class T>
InjectiveResult<T> make_injective(const PolyCurve<T>& g, const T& eps, std::uint64_t seed, const Tolerance& tol = {});

}  // namespace pconvex
