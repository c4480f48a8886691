#include "g2spiral/geometry.hpp"

#include <cmath>

#include "g2spiral/errors.hpp"

namespace g2spiral {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::WrongWinding: return "WrongWinding";
    case ErrorCode::BiarcDegenerate: return "BiarcDegenerate";
    case ErrorCode::PositiveQ: return "PositiveQ";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::PoleOnCurve: return "PoleOnCurve";
    case ErrorCode::CoincidentEndpoints: return "CoincidentEndpoints";
    case ErrorCode::GrazingUnresolved: return "GrazingUnresolved";
    case ErrorCode::DomainError: return "DomainError";
  }
  return "Unknown";
}

double reduce_angle(double x, int sign) {
  if (!std::isfinite(x)) throw SpiralError(ErrorCode::NonFinite, "angle is not finite");
  double r = std::remainder(x, kTwoPi);  // [-pi, pi]
  if (sign >= 0) {
    if (r <= -kPi) r += kTwoPi;
  } else {
    if (r >= kPi) r -= kTwoPi;
  }
  return r;
}

double angle_diff(double a, double b) { return reduce_angle(a - b, +1); }

bool angles_equal(double a, double b, double tol) { return std::abs(angle_diff(a, b)) <= tol; }

Similarity Similarity::inverse() const {
  Similarity inv;
  inv.rotation = -rotation;
  inv.scale = 1.0 / scale;
  inv.translation = -(inv.scale * (Eigen::Rotation2Dd(inv.rotation) * translation));
  return inv;
}

Similarity Similarity::after(const Similarity& first) const {
  Similarity out;
  out.rotation = rotation + first.rotation;
  out.scale = scale * first.scale;
  out.translation = apply(first.translation);
  return out;
}

}  // namespace g2spiral
