#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <vector>

#include "pconvex/surd.hpp"

namespace pconvex {

using Rational = mpq_class;

/// Default relative zero tolerance for float64 mode.
inline constexpr double kDefaultTau = 1e-9;

struct Tolerance {
  double tau = kDefaultTau;
};

enum class NumericMode { rational, f64 };

// Per-mode numeric behaviour. Exact mode measures lengths as Surd values so
// that equalities of norms are decidable; float mode uses plain doubles.
template <class T>
struct NumTraits;

template <>
struct NumTraits<double> {
  static constexpr bool exact = false;
  static constexpr NumericMode mode = NumericMode::f64;
  using Length = double;
  static Length sqrt(double x) { return std::sqrt(x); }
  static double to_double(double x) { return x; }
  static double length_to_double(double x) { return x; }
  static double from_double(double x) { return x; }
};

template <>
struct NumTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr NumericMode mode = NumericMode::rational;
  using Length = Surd;
  static Length sqrt(const Rational& x) { return Surd::sqrt(x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static double length_to_double(const Surd& x) { return x.to_double(); }
  static Rational from_double(double x) { return Rational(x); }
};

template <class T>
using Length = typename NumTraits<T>::Length;

template <class T>
double to_double(const T& x) {
  return NumTraits<T>::to_double(x);
}

inline double length_to_double(double x) { return x; }
inline double length_to_double(const Surd& x) { return x.to_double(); }

/// Rounds x to the nearest multiple of 2^-bits and returns it as an exact rational.
Rational snap(double x, int bits = 30);

template <class T>
T snap_to(double x, int bits = 30) {
  if constexpr (NumTraits<T>::exact) {
    return snap(x, bits);
  } else {
    return x;
  }
}

/// Parses "p/q", integers, decimals and scientific notation exactly.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// Smallest dyadic rational >= sqrt(x) with the given number of fraction bits.
Rational sqrt_upper(const Rational& x, int bits = 40);
/// Largest dyadic rational <= sqrt(x).
Rational sqrt_lower(const Rational& x, int bits = 40);

template <class T>
T sqrt_upper_t(const T& x) {
  if constexpr (NumTraits<T>::exact) {
    return sqrt_upper(x);
  } else {
    return std::sqrt(x) * (1.0 + 4e-16);
  }
}

// Zero test: exact in rational mode, |x| <= tau * scale in float mode.
template <class T>
bool is_zero(const T& x, double scale, const Tolerance& tol = {}) {
  if constexpr (NumTraits<T>::exact) {
    (void)scale;
    (void)tol;
    return sgn(x) == 0;
  } else {
    return std::abs(x) <= tol.tau * std::max(scale, 1e-300);
  }
}

template <class T>
int sign_of(const T& x) {
  if constexpr (NumTraits<T>::exact) {
    return sgn(x);
  } else {
    return (x > 0) - (x < 0);
  }
}

template <class T>
T abs_of(const T& x) {
  if constexpr (NumTraits<T>::exact) {
    return abs(x);
  } else {
    return std::abs(x);
  }
}

/// Complex number over an ordered field. std::complex is unspecified for
/// non-floating types, so exact arithmetic needs its own.
template <class T>
struct Complex {
  T re{0};
  T im{0};

  Complex() = default;
  Complex(T r, T i = T(0)) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return Complex(T(0), T(1)); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    T m = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(m);
    return *this;
  }
  Complex& operator*=(const T& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    T n = o.norm2();
    T r = (re * o.re + im * o.im) / n;
    T m = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(m);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const T& s) { return a *= s; }
  friend Complex operator*(const T& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  Complex conj() const { return Complex(re, -im); }
  T norm2() const { return re * re + im * im; }
  /// |re| + |im|, an upper bound for the modulus that stays rational.
  T l1() const { return abs_of(re) + abs_of(im); }
  bool exactly_zero() const { return sign_of(re) == 0 && sign_of(im) == 0; }
};

template <class T>
double abs_double(const Complex<T>& z) {
  return std::hypot(to_double(z.re), to_double(z.im));
}

template <class T>
using Vec = std::vector<T>;

}  // namespace pconvex
