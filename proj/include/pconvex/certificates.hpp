#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pconvex/curve.hpp"
#include "pconvex/polynomial.hpp"

namespace pconvex {

/// Sum over segments of the closed-form integral of sum_j P_j(z(t)) z_j'(t).
/// Exact in rational mode. Throws DimensionMismatch or InvalidInput (open curve).
template <class T>
Complex<T> contour_integral(const PolyCurve<T>& c, const OneForm<T>& form);

/// Integrals of every monomial form up to max_degree, in search order.
template <class T>
std::vector<Complex<T>> monomial_integrals(const PolyCurve<T>& c, unsigned max_degree);

enum class Verdict { certified, certified_float, inconclusive };
const char* verdict_name(Verdict v);

template <class T>
struct Certificate {
  OneForm<T> form;
  /// The contour integral, or its coefficient in front of 2*pi*i when
  /// `per_two_pi_i` is set (pullback curves, see MonomialImageCurve).
  Complex<T> integral;
  bool per_two_pi_i = false;
  Verdict verdict = Verdict::inconclusive;
  std::string curve_digest;

  bool certified() const { return verdict != Verdict::inconclusive; }
  /// Integral as a double pair, 2*pi*i factor applied.
  std::pair<double, double> integral_value() const;
};

/// Nonzero test scaled by the size of the form on the curve (float mode) or
/// exact (rational mode).
template <class T>
Verdict verdict_for(const Complex<T>& integral, double scale, const Tolerance& tol);

/// Nonzero integral of a polynomial one-form certifies polynomial
/// convexity of a simple closed curve. Throws NotSimple / DegenerateSegment for
/// non-simple input; a zero integral gives Verdict::inconclusive.
template <class T>
Certificate<T> certify(const PolyCurve<T>& c, const OneForm<T>& form, const Tolerance& tol = {});

/// First monomial form z^a dz_j (graded order) with nonzero integral.
template <class T>
std::optional<Certificate<T>> certificate_search(const PolyCurve<T>& c, unsigned max_degree, const Tolerance& tol = {});

/// Winding number of f o c about 0. Each segment is split until f stays in a
/// quarter-plane cone around its midpoint value, so the principal-branch
/// increments are unambiguous. Throws DomainError if f vanishes on the curve
/// (or comes within the float tolerance of 0).
template <class T>
long winding_number(const PolyCurve<T>& c, const CPolynomial<T>& f, const Tolerance& tol = {});

/// Complex-linear map C^n -> C^2 given by two rows, and a base point.
template <class T>
struct LinearFrame {
  std::vector<Complex<T>> row1;
  std::vector<Complex<T>> row2;
  std::vector<Complex<T>> base;
  std::pair<std::size_t, std::size_t> pivot;

  std::pair<Complex<T>, Complex<T>> apply(std::span<const Complex<T>> z) const;
};

/// u, w are C-linearly independent iff some 2x2 minor of [u w] is nonzero.
/// Returns the pivot pair with the largest |minor|^2, or nullopt.
template <class T>
std::optional<std::pair<std::size_t, std::size_t>> independent_pivot(std::span<const Complex<T>> u,
                                                                     std::span<const Complex<T>> w,
                                                                     const Tolerance& tol = {});

/// Frame with T(u) = (1,1), T(w) = (i,-i), supported on the pivot pair, and
/// the form (T2(z) - T2(a)) dT1(z). The boundary of the triangle
/// a, a+u, a+w integrates to exactly i. Throws DomainError if u, w are
/// C-linearly dependent.
template <class T>
std::pair<LinearFrame<T>, OneForm<T>> totally_real_frame(std::span<const Complex<T>> a, std::span<const Complex<T>> u,
                                                         std::span<const Complex<T>> w, const Tolerance& tol = {});

/// Closed curve in C^n given as the image of a closed planar polyline in C
/// under z -> (z^e_1, ..., z^e_n), e_j integers (negative allowed off 0).
/// Integrals of polynomial forms are computed by pullback to a Laurent form
/// on the base: every power except w^-1 dw integrates to 0 exactly, and
/// w^-1 dw contributes 2*pi*i times the winding number about 0.
template <class T>
struct MonomialImageCurve {
  PolyCurve<T> base;
  std::vector<int> exponents;

  MonomialImageCurve(PolyCurve<T> base, std::vector<int> exponents);

  std::size_t complex_dim() const { return exponents.size(); }
  std::vector<Complex<T>> image(const Complex<T>& w) const;
  /// Image of the base vertices (same parameters).
  PolyCurve<T> vertex_polyline() const;
  long base_winding() const;
  /// Coefficient R with integral = 2*pi*i * R.
  Complex<T> integral_per_two_pi_i(const OneForm<T>& form) const;
  /// Injective iff the base is simple and some exponent is +-1.
  bool is_simple() const;
};

template <class T>
std::vector<Complex<T>> monomial_integrals(const MonomialImageCurve<T>& c, unsigned max_degree);

template <class T>
Certificate<T> certify(const MonomialImageCurve<T>& c, const OneForm<T>& form, const Tolerance& tol = {});

template <class T>
std::optional<Certificate<T>> certificate_search(const MonomialImageCurve<T>& c, unsigned max_degree,
                                                 const Tolerance& tol = {});

}  // namespace pconvex
