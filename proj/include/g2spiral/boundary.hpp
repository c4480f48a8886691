#pragma once

#include "g2spiral/geometry.hpp"

namespace g2spiral {

/// G2 Hermite data in the chord frame: A = (-c, 0), B = (c, 0).
/// Angles are tangent directions relative to AB; n1/n2 count how many times
/// the curve crosses the rays that extend the chord beyond A and beyond B.
struct BoundaryConditions {
  double c = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  int n1 = 0;
  int n2 = 0;

  /// sgn(k2 - k1), or 0 when k1 == k2.
  int monotonicity() const { return (k2 > k1) - (k2 < k1); }

  /// alpha + 2 M n1 pi
  double cumulative_alpha() const;
  /// beta + 2 M n2 pi
  double cumulative_beta() const;
};

struct MoebiusInvariants {
  double Q = 0.0;
  double omega = 0.0;  // cumulative, not reduced
  int M = 0;
};

/// Q within this distance of zero is treated as the biarc case.
inline constexpr double kBiarcBand = 1e-12;

/// Validates c, finiteness and monotonicity, and reduces alpha/beta into the
/// half-open range selected by M. Throws NonMonotone, NonFinite or DomainError.
BoundaryConditions normalized(const BoundaryConditions& bc);

MoebiusInvariants compute_invariants(const BoundaryConditions& bc);

/// Throws WrongWinding, BiarcDegenerate or PositiveQ.
void check_feasibility(const MoebiusInvariants& inv);

struct Canonical {
  BoundaryConditions bc;
  bool reflected = false;
};

/// Mirrors an M = -1 problem across the chord so that M = +1.
Canonical canonicalize(const BoundaryConditions& bc);

/// Endpoint data in world coordinates; tangents are absolute directions.
struct WorldProblem {
  Vec2 A = Vec2(-1.0, 0.0);
  Vec2 B = Vec2(1.0, 0.0);
  double tangent1 = 0.0;
  double tangent2 = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  int n1 = 0;
  int n2 = 0;
};

struct ChordFrame {
  BoundaryConditions bc;
  Similarity world_to_chord;
};

/// Expresses world-frame endpoint data in the chord frame of AB.
ChordFrame from_world(const Vec2& A, const Vec2& B, double tangent1, double tangent2, double k1,
                      double k2, int n1 = 0, int n2 = 0);
ChordFrame from_world(const WorldProblem& p);

}  // namespace g2spiral
