#include "g2spiral/involute.hpp"

#include <cmath>
#include <limits>

#include "g2spiral/errors.hpp"

namespace g2spiral {

double sin_minus_x_cos(double x) {
  if (std::abs(x) < 0.25) {
    // sum_{n>=1} (-1)^(n+1) 2n x^(2n+1) / (2n+1)!
    const double x2 = x * x;
    double term = x * x2 / 3.0;  // n = 1
    double sum = term;
    for (int n = 2; n < 12; ++n) {
      term *= -x2 * n / ((n - 1) * (2.0 * n) * (2.0 * n + 1.0));
      sum += term;
    }
    return sum;
  }
  return std::sin(x) - x * std::cos(x);
}

InvolutePoint involute_eval(double R, double t) {
  if (!(R > 0.0) || !(t >= 0.0) || !std::isfinite(t)) {
    throw SpiralError(ErrorCode::DomainError, "involute_eval requires R > 0 and t >= 0");
  }
  const double ct = std::cos(t);
  const double st = std::sin(t);
  InvolutePoint p;
  p.t = t;
  p.point = {R * (ct + t * st), R * sin_minus_x_cos(t)};
  p.s = 0.5 * R * t * t;
  p.tau = t;
  p.k = t > 0.0 ? 1.0 / (R * t) : std::numeric_limits<double>::infinity();
  p.polar_rho = R * std::sqrt(t * t + 1.0);
  p.polar_phi = t - std::atan(t);
  return p;
}

InvolutePoint reflected_eval(double t) {
  if (!(t > 0.0)) throw SpiralError(ErrorCode::DomainError, "reflected_eval requires t > 0");
  InvolutePoint p = involute_eval(1.0, t);
  p.point.y() = -p.point.y();
  p.tau = -p.tau;
  p.k = -p.k;
  p.polar_phi = -p.polar_phi;
  return p;
}

Vec2 reflected_offset_from_cusp(double t) {
  const double h = std::sin(0.5 * t);
  return {t * std::sin(t) - 2.0 * h * h, -sin_minus_x_cos(t)};
}

ChordGeometry arc_chord(double t0, double theta) {
  if (!(theta > 0.0) || !(t0 > theta)) {
    throw SpiralError(ErrorCode::DomainError, "arc_chord requires t0 > theta > 0");
  }
  // c e^{i mu} = e^{-i t0} (t0 sin(theta) + i (theta cos(theta) - sin(theta)))
  const double u = t0 * std::sin(theta);
  const double v = -sin_minus_x_cos(theta);
  const double cs = std::cos(t0);
  const double sn = std::sin(t0);
  const double c_cos_mu = u * cs + v * sn;
  const double c_sin_mu = v * cs - u * sn;
  ChordGeometry g;
  g.c = std::hypot(u, v);
  g.mu = std::atan2(c_sin_mu, c_cos_mu);
  if (!(g.c > 0.0)) throw SpiralError(ErrorCode::DomainError, "degenerate involute chord");
  return g;
}

InvoluteArc make_arc(double t0, double theta) {
  const ChordGeometry g = arc_chord(t0, theta);
  InvoluteArc arc;
  arc.t0 = t0;
  arc.theta = theta;
  arc.t1 = t0 - theta;
  arc.t2 = t0 + theta;
  arc.chord_half = g.c;
  arc.chord_dir = g.mu;
  return arc;
}

ArcAngles arc_boundary_angles(const InvoluteArc& arc) {
  return {reduce_angle(-arc.t1 - arc.chord_dir, +1), reduce_angle(-arc.t2 - arc.chord_dir, +1)};
}

BoundaryConditions arc_boundary(const InvoluteArc& arc) {
  const ArcAngles a = arc_boundary_angles(arc);
  BoundaryConditions bc;
  bc.c = arc.chord_half;
  bc.alpha = a.alpha;
  bc.beta = a.beta;
  bc.k1 = -1.0 / arc.t1;
  bc.k2 = -1.0 / arc.t2;
  return bc;
}

Similarity arc_to_unit_chord(const InvoluteArc& arc) {
  const Vec2 mid =
      0.5 * (reflected_offset_from_cusp(arc.t1) + reflected_offset_from_cusp(arc.t2));
  Similarity s;
  s.rotation = -arc.chord_dir;
  s.scale = 1.0 / arc.chord_half;
  s.translation = -s.scale * (Eigen::Rotation2Dd(s.rotation) * mid);
  return s;
}

}  // namespace g2spiral
