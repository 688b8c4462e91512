#pragma once

#include <cstdint>

#include "pconvex/perturb.hpp"

namespace pconvex {

// Open neighbourhood {x : dist(x, core) < radius} of an open polyline.
struct Tube {
  PolyCurve<Rational> core;
  Rational radius;

  Tube() = default;
  Tube(PolyCurve<Rational> c, Rational r);
  bool contains(std::span<const Rational> x) const;
  /// Breakpoints plus three levels of midpoint refinement on every segment.
  bool contains_curve(const PolyCurve<Rational>& c) const;
};

/// True if the vertex sequence of the open polyline `arc` appears as
/// consecutive vertices of `c` (either direction, cyclically when closed).
bool contains_subpolyline(const PolyCurve<Rational>& c, const PolyCurve<Rational>& arc);

struct ClosedArc {
  PolyCurve<Rational> curve;  // vertices 0 .. arc.size()-1 are the arc itself
  bool short_connector = false;
  std::size_t added_begin = 0;  // first vertex index after the arc
  int attempts = 0;
};

/// Simple closed polyline through the arc, inside the tube: endpoint
/// extensions along seeded directions joined either directly (close ends) or
/// through a translated copy of the arc at half the tube radius.
ClosedArc close_arc(const PolyCurve<Rational>& arc, const Tube& omega, std::uint64_t seed);

struct ContainResult {
  ClosedArc closed;
  Ball ball;
  PerturbResult perturbation;
  const PolyCurve<Rational>& curve() const { return perturbation.curve; }
  const Certificate<Rational>& certificate() const { return perturbation.certificate; }
};

/// close_arc followed by perturb_rectifiable in a ball inside the tube that
/// misses the arc, so the arc survives in the certified output.
ContainResult contain_in_pc_curve(const PolyCurve<Rational>& arc, const Tube& omega, const Rational& eps,
                                  std::uint64_t seed);

}  // namespace pconvex
