#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pconvex/certificates.hpp"
#include "pconvex/curve.hpp"

namespace pconvex {

struct Ball {
  Vec<Rational> center;
  Rational radius;

  Ball() = default;
  Ball(Vec<Rational> c, Rational r);
  bool contains_open(std::span<const Rational> x) const;
  bool contains_closed(std::span<const Rational> x) const;
};

enum class Side { plus, minus };
inline const char* side_name(Side s) { return s == Side::plus ? "plus" : "minus"; }

struct PerturbResult {
  PolyCurve<Rational> curve;
  Side side = Side::plus;
  Certificate<Rational> certificate;
  Surd bv_distance;
  Complex<Rational> sigma_integral;

  // construction data, kept for re-verification and reporting
  PolyCurve<Rational> plus_curve;
  PolyCurve<Rational> minus_curve;
  Complex<Rational> plus_integral;
  Complex<Rational> minus_integral;
  PolyCurve<Rational> sigma;
  Vec<Rational> p;
  Rational small_radius;  // radius of B_p (rectifiable) or bump amplitude (smooth)
  Surd replaced_length;   // length of the replaced arc (rectifiable case)
  Surd sup_distance;
  Surd variation_distance;
  double first_order_deviation = 0;  // smooth case: max |divided difference of the bump|
  int attempts = 0;
};

/// Perturbs a closed simple polyline in C^n, n >= 2, inside B so that some
/// polynomial one-form has nonzero integral over the result. All predicates and integrals are exact. Throws DomainError if B
/// misses the curve, RetryExhausted if no admissible B_p / c is found.
PerturbResult perturb_rectifiable(const PolyCurve<Rational>& gamma, const Rational& eps, const Ball& B, std::uint64_t seed);

struct SmoothOptions {
  /// Bump height; defaults to eps/4.
  std::optional<Rational> amplitude;
  /// Initial half-width of the support in parameter units.
  Rational initial_half_width = Rational(1, 8);
  int direction_retries = 64;
  int shrink_steps = 24;
  Tolerance tol{};
};

/// Bump-function variant: gamma +- chi v on a shrinking support.
PerturbResult perturb_smooth(const PolyCurve<Rational>& gamma, const Rational& eps, const Ball& B, std::uint64_t seed,
                             const SmoothOptions& opts = {});

/// Exact test of  X \ B = Y \ B  for the open ball B: every part of a segment
/// of one curve that is not covered by collinear segments of the other lies
/// in the closed ball.
bool agree_outside_ball(const PolyCurve<Rational>& x, const PolyCurve<Rational>& y, const Ball& B);

/// Re-checks every postcondition of a perturbation result against its input
/// from scratch. Returns an empty string when all hold, otherwise a
/// description of the first failure.
std::string verify_perturbation(const PolyCurve<Rational>& gamma, const Rational& eps, const Ball& B,
                                const PerturbResult& r, bool rectifiable);

}  // namespace pconvex
