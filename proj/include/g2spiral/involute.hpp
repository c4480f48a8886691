#pragma once

#include "g2spiral/boundary.hpp"
#include "g2spiral/geometry.hpp"

namespace g2spiral {

/// A point on the involute of a circle of radius R centred at the origin,
/// parameterized by the polar angle t of the thread's contact point.
struct InvolutePoint {
  double t = 0.0;
  Vec2 point = Vec2::Zero();
  double s = 0.0;    ///< arc length from the cusp, R t^2 / 2
  double tau = 0.0;  ///< tangent direction
  double k = 0.0;    ///< signed curvature, infinite at t = 0
  double polar_rho = 0.0;
  double polar_phi = 0.0;
};

InvolutePoint involute_eval(double R, double t);

/// Unit-radius involute mirrored across the x axis, so curvature -1/t
/// increases from -inf to 0. Requires t > 0.
InvolutePoint reflected_eval(double t);

/// reflected_eval(t).point - (1, 0), accurate for small t where the point
/// itself is within rounding of the cusp.
Vec2 reflected_offset_from_cusp(double t);

/// sin(x) - x cos(x), with a series near zero.
double sin_minus_x_cos(double x);

struct ChordGeometry {
  double c = 0.0;   ///< half chord length
  double mu = 0.0;  ///< direction of the chord from t1 to t2, in (-pi, pi]
};

/// Chord of the reflected-involute arc [t0 - theta, t0 + theta].
ChordGeometry arc_chord(double t0, double theta);

struct InvoluteArc {
  double t0 = 0.0;
  double theta = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double chord_half = 0.0;
  double chord_dir = 0.0;
};

/// Requires t0 > theta > 0.
InvoluteArc make_arc(double t0, double theta);

struct ArcAngles {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Endpoint tangent directions relative to the chord, reduced into (-pi, pi].
ArcAngles arc_boundary_angles(const InvoluteArc& arc);

/// Boundary data of the arc in its own chord frame (winding counts zero).
BoundaryConditions arc_boundary(const InvoluteArc& arc);

/// Maps cusp-relative coordinates (see reflected_offset_from_cusp) of the
/// arc onto the unit chord: t1 -> (-1, 0), t2 -> (1, 0).
Similarity arc_to_unit_chord(const InvoluteArc& arc);

}  // namespace g2spiral
