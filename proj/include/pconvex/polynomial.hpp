#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "pconvex/number.hpp"

namespace pconvex {

using Exponent = std::vector<unsigned>;

/// Univariate complex polynomial, coefficient k multiplies t^k.
template <class T>
using UPoly = std::vector<Complex<T>>;

template <class T>
UPoly<T> upoly_mul(const UPoly<T>& a, const UPoly<T>& b);
template <class T>
void upoly_add_scaled(UPoly<T>& acc, const UPoly<T>& a, const Complex<T>& s);
template <class T>
Complex<T> upoly_eval(const UPoly<T>& p, const T& t);
/// Integral over [0,1].
template <class T>
Complex<T> upoly_integral01(const UPoly<T>& p);

// Sparse polynomial in n complex variables with complex coefficients.
// Exact zero coefficients are never stored.
template <class T>
class CPolynomial {
 public:
  explicit CPolynomial(std::size_t nvars = 1) : nvars_(nvars) {}

  static CPolynomial constant(std::size_t nvars, const Complex<T>& c);
  static CPolynomial variable(std::size_t nvars, std::size_t j);
  static CPolynomial monomial(const Exponent& a, const Complex<T>& c = Complex<T>(T(1)));

  void add_term(const Exponent& a, const Complex<T>& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Complex<T>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  Complex<T> evaluate(std::span<const Complex<T>> z) const;
  CPolynomial derivative(std::size_t j) const;
  /// t -> P(base + t * dir) as a univariate polynomial.
  UPoly<T> along(std::span<const Complex<T>> base, std::span<const Complex<T>> dir) const;

  CPolynomial& operator+=(const CPolynomial& o);
  CPolynomial& operator*=(const Complex<T>& s);
  friend CPolynomial operator+(CPolynomial a, const CPolynomial& b) { return a += b; }
  friend CPolynomial operator*(CPolynomial a, const CPolynomial& b) { return a.times(b); }
  friend bool operator==(const CPolynomial& a, const CPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  template <class U>
  CPolynomial<U> convert() const;

 private:
  CPolynomial times(const CPolynomial& o) const;
  std::size_t nvars_;
  std::map<Exponent, Complex<T>> terms_;
};

/// Holomorphic one-form  sum_j P_j(z) dz_j.
template <class T>
struct OneForm {
  std::vector<CPolynomial<T>> components;

  OneForm() = default;
  explicit OneForm(std::vector<CPolynomial<T>> comps);

  std::size_t nvars() const { return components.size(); }

  /// z^a dz_j
  static OneForm monomial(const Exponent& a, std::size_t j);
  /// dP = sum_j dP/dz_j dz_j
  static OneForm exact_differential(const CPolynomial<T>& p);

  OneForm& operator+=(const OneForm& o);
  OneForm& operator*=(const Complex<T>& s);
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.components == b.components; }

  template <class U>
  OneForm<U> convert() const;
};

/// Exponents of total degree d in n variables, lexicographically descending
/// ((1,0) before (0,1)).
std::vector<Exponent> exponents_of_degree(std::size_t n, unsigned d);

/// Monomial one-forms z^a dz_j with |a| <= max_degree, ordered by
/// (degree, component index, exponent).
template <class T>
std::vector<OneForm<T>> monomial_forms(std::size_t n, unsigned max_degree);

}  // namespace pconvex
