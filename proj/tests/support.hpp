#pragma once

#include <cmath>
#include <random>

#include "g2spiral/boundary.hpp"
#include "g2spiral/geometry.hpp"

namespace g2spiral::testkit {

// Boundary data drawn as in the round-trip property: uniform angles,
// curvatures in [-10, 10], winding counts in {0, 1, 2}, rejected until the
// problem is feasible with Q < -1e-6.
inline BoundaryConditions random_feasible(std::mt19937_64& rng, double c_lo = 0.5,
                                          double c_hi = 2.0) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> kd(-10.0, 10.0);
  std::uniform_real_distribution<double> cd(c_lo, c_hi);
  std::uniform_int_distribution<int> nd(0, 2);
  for (;;) {
    BoundaryConditions bc{cd(rng), ang(rng), ang(rng), kd(rng), kd(rng), nd(rng), nd(rng)};
    if (bc.k1 == bc.k2) continue;
    bc = normalized(bc);
    const MoebiusInvariants inv = compute_invariants(bc);
    if (inv.omega * inv.M > 0.0 && inv.Q < -1e-6) return bc;
  }
}

inline Similarity random_similarity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  std::uniform_real_distribution<double> sc(0.2, 5.0);
  std::uniform_real_distribution<double> tr(-10.0, 10.0);
  return {ang(rng), sc(rng), Vec2(tr(rng), tr(rng))};
}

inline double angle_error(double a, double b) { return std::abs(angle_diff(a, b)); }

}  // namespace g2spiral::testkit
