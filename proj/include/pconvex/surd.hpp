#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace pconvex {

// Exact real number of the form  sum_i c_i * sqrt(N_i)  with rational c_i and
// positive integers N_i whose pairwise products are never perfect squares.
// In that canonical form the square roots are linearly independent over Q,
// so a value is zero iff it has no terms; signs are decided by interval
// refinement with integer square roots.
class Surd {
 public:
  struct Term {
    mpq_class coeff;
    mpz_class radicand;  // 1 for the rational part
  };

  Surd() = default;
  Surd(const mpq_class& value);  // NOLINT: rationals embed implicitly
  Surd(long value) : Surd(mpq_class(value)) {}

  /// sqrt(x) for x >= 0.
  static Surd sqrt(const mpq_class& x);

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const mpq_class& s);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const mpq_class& s) { return a *= s; }
  friend Surd operator*(const mpq_class& s, Surd a) { return a *= s; }
  Surd operator-() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  int sign() const;
  double to_double() const;
  /// Rational lower/upper bounds using `bits` fraction bits per square root.
  std::pair<mpq_class, mpq_class> enclosure(unsigned bits) const;

  const std::vector<Term>& terms() const { return terms_; }
  std::string to_string() const;

  friend int compare(const Surd& a, const Surd& b) { return (a - b).sign(); }
  friend bool operator==(const Surd& a, const Surd& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }
  friend bool operator<(const Surd& a, const Surd& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Surd& a, const Surd& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Surd& a, const Surd& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Surd& a, const Surd& b) { return compare(a, b) >= 0; }

 private:
  void add_term(const mpq_class& coeff, const mpz_class& radicand);
  std::vector<Term> terms_;
};

/// max of two exact lengths.
inline const Surd& max_of(const Surd& a, const Surd& b) { return a < b ? b : a; }
inline double max_of(double a, double b) { return a < b ? b : a; }

}  // namespace pconvex
