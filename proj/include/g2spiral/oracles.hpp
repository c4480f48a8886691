#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "g2spiral/boundary.hpp"
#include "g2spiral/geometry.hpp"

namespace g2spiral {

/// Sorted parameters in [0, 1]: n uniform points plus geometric clusters
/// 10^-5 .. 10^-15 away from each end, so crossings of the chord rays right
/// next to an endpoint are not hidden inside the first or last segment.
std::vector<double> graded_parameters(int n);

/// Point of the polar tractrix with leash length T, in natural parameter s.
struct TractrixPoint {
  double s = 0.0;
  Vec2 point = Vec2::Zero();
  double tau = 0.0;
  double k = 0.0;  ///< -inf at s = 0, zero at s = T ln 2
  double psi = 0.0;
};

TractrixPoint tractrix_eval(double T, double s);

struct SampledArc {
  ChordFrame frame;  ///< chord-frame boundary data with measured winding counts
  std::vector<Vec2> polyline;
};

/// Boundary data of the tractrix arc [s1, s2], 0 < s1 < s2.
SampledArc tractrix_bc(double T, double s1, double s2, int samples = 40001);

/// Boundary data of the reflected-involute arc [t1, t2], 0 < t1 < t2.
SampledArc involute_bc(double t1, double t2, int samples = 40001);

/// Clothoid through the origin with k(s) = s / a^2 and tau(0) = 0.
Jet cornu_eval(double a, double s);

/// Boundary data of the clothoid arc [s1, s2], s1 < s2.
SampledArc cornu_bc(double a, double s1, double s2, int samples = 4001);

/// Crossings of the polyline's interior with the rays extending the chord
/// beyond A (first) and beyond B (second). The polyline must start at A and
/// end at B. Throws GrazingUnresolved when a vertex sits on a ray even after
/// the ray is turned by 1e-9 rad.
std::pair<int, int> winding_counts(std::span<const Vec2> polyline, const Vec2& A, const Vec2& B);

/// Minimum distance from p to the curve f on [lo, hi], seeded by `seeds`
/// uniform samples and refined by golden-section search.
double distance_to_curve(const std::function<Vec2(double)>& f, double lo, double hi, const Vec2& p,
                         int seeds = 2000);

}  // namespace g2spiral
