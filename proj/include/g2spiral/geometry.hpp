#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace g2spiral {

using Vec2 = Eigen::Vector2d;
using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline Complex to_complex(const Vec2& p) { return {p.x(), p.y()}; }
inline Vec2 to_vec(const Complex& z) { return {z.real(), z.imag()}; }

/// Reduces an angle into (-pi, pi] for sign = +1 or [-pi, pi) for sign = -1.
/// Throws SpiralError(NonFinite) on NaN/inf input.
double reduce_angle(double x, int sign = +1);

/// Signed difference a - b wrapped into (-pi, pi].
double angle_diff(double a, double b);

/// True when a and b agree modulo 2pi within tol.
bool angles_equal(double a, double b, double tol);

/// Point with tangent direction and signed curvature.
struct Jet {
  Vec2 point = Vec2::Zero();
  double tau = 0.0;
  double k = 0.0;
};

/// p -> scale * R(rotation) * p + translation.
struct Similarity {
  double rotation = 0.0;
  double scale = 1.0;
  Vec2 translation = Vec2::Zero();

  static Similarity identity() { return {}; }

  Vec2 apply(const Vec2& p) const {
    return scale * (Eigen::Rotation2Dd(rotation) * p) + translation;
  }

  /// Tangent is rotated, curvature is divided by scale.
  Jet apply(const Jet& j) const { return {apply(j.point), j.tau + rotation, j.k / scale}; }

  Similarity inverse() const;

  /// (*this) after `first`: x -> this(first(x)).
  Similarity after(const Similarity& first) const;
};

/// Mirror across the x axis, applied to a jet.
inline Jet mirror_x(const Jet& j) { return {Vec2(j.point.x(), -j.point.y()), -j.tau, -j.k}; }

}  // namespace g2spiral
