#include "g2spiral/boundary.hpp"

#include <cmath>

#include "g2spiral/errors.hpp"

namespace g2spiral {

double BoundaryConditions::cumulative_alpha() const {
  return alpha + 2.0 * monotonicity() * n1 * kPi;
}

double BoundaryConditions::cumulative_beta() const {
  return beta + 2.0 * monotonicity() * n2 * kPi;
}

BoundaryConditions normalized(const BoundaryConditions& bc) {
  for (double v : {bc.c, bc.alpha, bc.beta, bc.k1, bc.k2}) {
    if (!std::isfinite(v)) throw SpiralError(ErrorCode::NonFinite, "boundary data is not finite");
  }
  if (!(bc.c > 0.0)) throw SpiralError(ErrorCode::DomainError, "chord half-length must be positive");
  if (bc.n1 < 0 || bc.n2 < 0) throw SpiralError(ErrorCode::DomainError, "winding counts must be nonnegative");
  const int M = bc.monotonicity();
  if (M == 0) throw SpiralError(ErrorCode::NonMonotone, "k1 == k2 admits no spiral");
  BoundaryConditions out = bc;
  out.alpha = reduce_angle(bc.alpha, M);
  out.beta = reduce_angle(bc.beta, M);
  return out;
}

MoebiusInvariants compute_invariants(const BoundaryConditions& raw) {
  const BoundaryConditions bc = normalized(raw);
  MoebiusInvariants inv;
  inv.M = bc.monotonicity();
  inv.omega = 0.5 * (bc.cumulative_alpha() + bc.cumulative_beta());
  const double s = std::sin(0.5 * (bc.alpha + bc.beta));
  inv.Q = (bc.k1 * bc.c + std::sin(bc.alpha)) * (bc.k2 * bc.c - std::sin(bc.beta)) + s * s;
  return inv;
}

void check_feasibility(const MoebiusInvariants& inv) {
  // Q first: tangent circles of curvature also force omega = 0.
  if (std::abs(inv.Q) <= kBiarcBand) {
    throw SpiralError(ErrorCode::BiarcDegenerate, "Q = 0: boundary circles of curvature are tangent");
  }
  if (inv.Q > 0.0) {
    throw SpiralError(ErrorCode::PositiveQ, "Q > 0 violates the spiral necessary condition");
  }
  const int omega_sign = (inv.omega > 0.0) - (inv.omega < 0.0);
  if (omega_sign != inv.M) {
    throw SpiralError(ErrorCode::WrongWinding, "sgn(omega) must equal sgn(k2 - k1)");
  }
}

Canonical canonicalize(const BoundaryConditions& raw) {
  const BoundaryConditions bc = normalized(raw);
  if (bc.monotonicity() > 0) return {bc, false};
  BoundaryConditions m = bc;
  m.alpha = -bc.alpha;
  m.beta = -bc.beta;
  m.k1 = -bc.k1;
  m.k2 = -bc.k2;
  // [-pi, pi) mirrors onto (-pi, pi], which is already the M = +1 range.
  return {m, true};
}

ChordFrame from_world(const Vec2& A, const Vec2& B, double tangent1, double tangent2, double k1,
                      double k2, int n1, int n2) {
  if (!A.allFinite() || !B.allFinite()) {
    throw SpiralError(ErrorCode::NonFinite, "endpoint is not finite");
  }
  const Vec2 d = B - A;
  const double len = d.norm();
  if (!(len > 0.0)) throw SpiralError(ErrorCode::CoincidentEndpoints, "A and B coincide");
  const double mu = std::atan2(d.y(), d.x());

  ChordFrame out;
  out.world_to_chord.rotation = -mu;
  out.world_to_chord.scale = 1.0;
  const Vec2 mid = 0.5 * (A + B);
  out.world_to_chord.translation = -(Eigen::Rotation2Dd(-mu) * mid);

  BoundaryConditions bc;
  bc.c = 0.5 * len;
  bc.alpha = tangent1 - mu;
  bc.beta = tangent2 - mu;
  bc.k1 = k1;
  bc.k2 = k2;
  bc.n1 = n1;
  bc.n2 = n2;
  out.bc = normalized(bc);
  return out;
}

ChordFrame from_world(const WorldProblem& p) {
  return from_world(p.A, p.B, p.tangent1, p.tangent2, p.k1, p.k2, p.n1, p.n2);
}

}  // namespace g2spiral
