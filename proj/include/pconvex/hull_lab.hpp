#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pconvex/certificates.hpp"
#include "pconvex/metrics.hpp"

namespace pconvex {

enum class HullKind { curve_only, polygon_with_interior, parametric_disc, explicit_union };
const char* hull_kind_name(HullKind k);

// Flat disc {center + z e_j : |z| <= radius} in C^n (real coordinates).
struct HullDisc {
  Vec<double> center;
  std::size_t axis = 0;
  double radius = 0;
};

// A set given in closed form: curves, flat discs and (planar only) filled
// polygons. `sample` holds points of the set at spacing about `mesh`.
struct HullModel {
  HullKind kind = HullKind::curve_only;
  std::size_t dim = 0;
  std::vector<PolyCurve<double>> curves;
  std::vector<HullDisc> discs;
  std::vector<PolyCurve<double>> filled;  // planar closed polygons with interior
  CompactSample<double> sample;
  double mesh = 0;

  bool contains(std::span<const double> x, double tol) const;
  double distance(std::span<const double> x) const;
};

/// Builds the sample of a model whose components are already set.
void sample_hull(HullModel& m, double h);

/// Max segment length.
template <class T>
double max_segment_length(const PolyCurve<T>& c);

template <class T>
struct SlitAnnulus {
  PolyCurve<T> curve;      // gamma_k, closed, N vertices
  PolyCurve<T> lambda;     // the enclosed arc, open
  HullModel hull;          // polygon with interior
  std::size_t k = 0;
};

/// Simple closed polyline in {1 < |z| < 1 + 1/k} minus the positive real
/// axis: two concentric arcs (radii 1 + 1/4k and 1 + 3/4k, arguments in
/// [pi/4k, 2 pi - pi/4k]) joined by radial caps. Throws InvalidInput if N
/// is too small for the chords to stay in the slit annulus.
template <class T>
SlitAnnulus<T> slit_annulus_family(std::size_t k, std::size_t n);

template <class T>
struct GraphFamily {
  PolyCurve<T> sigma;              // (z, conj z) on the unit N-gon
  MonomialImageCurve<T> sigma_k;   // gamma_k under z -> (z, 1/z)
  PolyCurve<T> sigma_k_polyline;   // vertex polyline of sigma_k
};

template <class T>
GraphFamily<T> graph_family(std::size_t k, std::size_t n);

struct KallinData {
  CompactSample<double> xk, xk_hull, x, x_hull, limit;
  HullModel xk_model, xk_hull_model, x_model, x_hull_model, limit_model;
  double limit_gap = 0;        // d_H(stated limit of the hulls, hull of X)
  double witness_distance = 0; // distance from (0,0) to the limit sample
  double length_xk = 0;        // sampled length of X_k
  double length_bound = 0;     // 2 (sqrt 2 + 1) pi
  double uniform_distance = 0; // sup |rho_k - rho| on matched samples
};

/// Two circles meeting at one point, lifted by (z, conj z / k) and
/// (2 + z, 1/k); hulls from the closed forms. M samples per component.
KallinData kallin_example(std::size_t k, std::size_t m);

struct TangentData {
  CompactSample<double> x, xk;
  HullModel x_model, xk_model;
  double length_x = 0, length_xk = 0;
  double uniform_distance = 0;  // sup over matched parameters of |rho_k - rho|
  double mesh = 0;
};

/// Unit circle (z, conj z) with `circles` tangent circles G_j in the plane
/// {(z, conj z)}; X_k swaps G_k for the circle E_k in p_k + (C, 0).
TangentData tangent_circles(std::size_t k, std::size_t circles, std::size_t m);

struct ConvergenceReport {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> violations;
  std::string to_csv() const;
};

/// For seeded random polynomials of total degree <= degree: the sup over
/// each hull sample must match the sup over X_k (maximum principle) and
/// satisfy ||P||_{hull_k} <= ||P||_X + L d_H(X_k, X), both within 10 mesh L,
/// L a Lipschitz bound of P on the data.
ConvergenceReport hull_limit_inequality(const std::vector<CompactSample<double>>& xks,
                                        const std::vector<HullModel>& hulls, const CompactSample<double>& x,
                                        unsigned degree, std::size_t trials, std::uint64_t seed);

// ---- plotting ------------------------------------------------------------

struct SvgLayer {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
  bool closed = false;
  bool dots = false;
};

/// Projection of a curve or sample to its first complex coordinate.
template <class T>
std::vector<std::pair<double, double>> first_coordinate(const PolyCurve<T>& c);
std::vector<std::pair<double, double>> first_coordinate(const CompactSample<double>& s);

/// Deterministic SVG with a legend naming the projection.
std::string render_svg(const std::vector<SvgLayer>& layers, const std::string& title);

std::string format_double(double x);

}  // namespace pconvex
