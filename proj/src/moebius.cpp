#include "g2spiral/moebius.hpp"

#include <cmath>
#include <string>

#include "g2spiral/errors.hpp"

namespace g2spiral {

namespace {

constexpr double kPoleGuard = 1e-14;

Complex pole_checked_denominator(const MoebiusMap& m, const Complex& z) {
  const Complex den = 1.0 + m.z0 * z;
  if (std::abs(den) < kPoleGuard) {
    throw SpiralError(ErrorCode::PoleOnCurve, "point lies on the pole of the Moebius map");
  }
  return den;
}

}  // namespace

UnitChordData unit_chord_data(const BoundaryConditions& bc) {
  return {bc.alpha, bc.beta, bc.k1 * bc.c, bc.k2 * bc.c};
}

MoebiusMap fit_map(const UnitChordData& target, const UnitChordData& base, double tol) {
  MoebiusMap m;
  m.lambda = reduce_angle(base.alpha - target.alpha, +1);
  const double lambda_b = target.beta - base.beta;
  m.residual_lambda = std::abs(angle_diff(m.lambda, lambda_b));

  const double rho_a = (target.k1 + std::sin(target.alpha)) / (base.k1 + std::sin(base.alpha));
  const double rho_b = (base.k2 - std::sin(base.beta)) / (target.k2 - std::sin(target.beta));
  m.rho_scale = rho_a;
  m.residual_rho = std::abs(rho_a / rho_b - 1.0);

  if (!std::isfinite(rho_a) || !(rho_a > 0.0)) {
    throw SpiralError(ErrorCode::ConsistencyFailure, "scale factor of the map is not positive");
  }
  if (!(m.residual_lambda <= tol) || !(m.residual_rho <= tol)) {
    throw SpiralError(ErrorCode::ConsistencyFailure,
                      "redundant map parameters disagree (lambda residual " +
                          std::to_string(m.residual_lambda) + ", rho residual " +
                          std::to_string(m.residual_rho) + ")");
  }

  // w'(-1) = 1/p and w'(1) = p, so the tangent at B turns by lambda and
  // k + sin(alpha) scales by rho at A.
  const Complex p = std::polar(rho_a, m.lambda);
  if (std::abs(1.0 + p) < kPoleGuard) {
    throw SpiralError(ErrorCode::DegenerateMap, "rho e^{i lambda} = -1");
  }
  m.z0 = (1.0 - p) / (1.0 + p);
  return m;
}

Complex map_point(const MoebiusMap& m, const Complex& z) {
  return (z + m.z0) / pole_checked_denominator(m, z);
}

Jet map_jet(const MoebiusMap& m, const Jet& j) {
  const Complex z = to_complex(j.point);
  const Complex den = pole_checked_denominator(m, z);
  const Complex w = (z + m.z0) / den;
  const Complex d1 = (1.0 - m.z0 * m.z0) / (den * den);
  const Complex d2_over_d1 = -2.0 * m.z0 / den;
  Jet out;
  out.point = to_vec(w);
  out.tau = j.tau + std::arg(d1);
  out.k = (j.k + std::imag(d2_over_d1 * std::polar(1.0, j.tau))) / std::abs(d1);
  return out;
}

}  // namespace g2spiral
