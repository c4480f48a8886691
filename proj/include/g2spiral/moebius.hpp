#pragma once

#include "g2spiral/boundary.hpp"
#include "g2spiral/geometry.hpp"

namespace g2spiral {

/// Boundary data on the unit chord (-1, 0) -> (1, 0); curvatures are k * c.
struct UnitChordData {
  double alpha = 0.0;
  double beta = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
};

UnitChordData unit_chord_data(const BoundaryConditions& bc);

/// w(z) = (z + z0) / (1 + z0 z). Fixes -1 and +1 for every z0.
struct MoebiusMap {
  Complex z0{0.0, 0.0};
  double lambda = 0.0;     ///< tangent rotation at the fixed points
  double rho_scale = 1.0;  ///< |w'| at z = +1
  double residual_lambda = 0.0;
  double residual_rho = 0.0;
};

inline constexpr double kMapConsistencyTol = 1e-8;

/// Map carrying the base arc's unit-chord data onto the target's.
/// Throws ConsistencyFailure when the redundant beta/k2 expressions disagree
/// with the alpha/k1 ones by more than `tol`, DegenerateMap when the map
/// would collapse.
MoebiusMap fit_map(const UnitChordData& target, const UnitChordData& base,
                   double tol = kMapConsistencyTol);

/// Throws PoleOnCurve when z is within 1e-14 of the pole -1/z0.
Complex map_point(const MoebiusMap& m, const Complex& z);

/// Transports position, tangent direction and curvature through the map.
Jet map_jet(const MoebiusMap& m, const Jet& j);

}  // namespace g2spiral
