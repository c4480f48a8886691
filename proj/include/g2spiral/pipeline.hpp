#pragma once

#include <vector>

#include "g2spiral/boundary.hpp"
#include "g2spiral/geometry.hpp"
#include "g2spiral/involute.hpp"
#include "g2spiral/moebius.hpp"
#include "g2spiral/solver.hpp"

namespace g2spiral {

/// Spiral interpolating G2 Hermite data, evaluated as
/// reflected involute -> unit chord -> Moebius map -> (mirror) -> world.
struct SpiralCurve {
  InvoluteArc arc;
  Similarity to_unit_base;      ///< cusp-relative involute coords -> unit chord
  UnitChordData base;           ///< unit-chord data of the involute arc
  MoebiusMap map;
  bool reflected = false;       ///< problem had M = -1 and was mirrored
  Similarity from_unit_target;  ///< unit chord -> world
  BoundaryConditions bc;        ///< input data (chord frame, reduced angles)
  Similarity chord_to_world;
  MoebiusInvariants invariants;  ///< of bc, not of the canonical mirror

  Vec2 world_A() const { return chord_to_world.apply(Vec2(-bc.c, 0.0)); }
  Vec2 world_B() const { return chord_to_world.apply(Vec2(bc.c, 0.0)); }
  double world_tangent1() const { return bc.alpha + chord_to_world.rotation; }
  double world_tangent2() const { return bc.beta + chord_to_world.rotation; }
  double world_k1() const { return bc.k1 / chord_to_world.scale; }
  double world_k2() const { return bc.k2 / chord_to_world.scale; }
  WorldProblem world_problem() const {
    return {world_A(), world_B(), world_tangent1(), world_tangent2(), world_k1(), world_k2(),
            bc.n1, bc.n2};
  }
};

struct CurveSample {
  double u = 0.0;
  Vec2 point = Vec2::Zero();
  double tau = 0.0;
  double k = 0.0;
  double s = 0.0;
};

SpiralCurve build(const BoundaryConditions& bc, const SolverConfig& cfg = {},
                  const Similarity& chord_to_world = Similarity::identity());

/// World-frame entry point: endpoints, absolute tangent directions, curvatures.
SpiralCurve build(const Vec2& A, const Vec2& B, double tangent1, double tangent2, double k1,
                  double k2, int n1 = 0, int n2 = 0, const SolverConfig& cfg = {});

/// u in [0, 1] is affine in the involute parameter t. s is left at zero.
CurveSample eval(const SpiralCurve& curve, double u);

/// n >= 2 uniform samples with cumulative chordal arc length and a
/// continuous tangent angle.
std::vector<CurveSample> sample(const SpiralCurve& curve, int n);

struct VerifyTolerances {
  double position = 1e-9;        ///< relative to the chord length 2c
  double tangent = 1e-8;         ///< radians
  double curvature_rel = 1e-8;
  double curvature_abs = 1e-10;  ///< used when |k| < small_curvature
  double small_curvature = 1e-2;
  double monotone_slack = 1e-10;
  double invariant = 1e-8;
  double moebius = kMapConsistencyTol;
  int sweep_samples = 10000;
};

struct VerificationReport {
  double position_residual = 0.0;  ///< max endpoint error / (2c)
  double tangent_residual = 0.0;   ///< max endpoint error mod 2pi
  double curvature_residual = 0.0; ///< max of relative/absolute errors
  bool curvature_ok = false;
  bool monotone = false;
  double worst_monotone_step = 0.0;
  int measured_n1 = 0;
  int measured_n2 = 0;
  MoebiusInvariants input;
  MoebiusInvariants recomputed;
  double q_residual = 0.0;
  double omega_residual = 0.0;
  double moebius_residual_lambda = 0.0;
  double moebius_residual_rho = 0.0;

  bool positions_ok = false;
  bool tangents_ok = false;
  bool invariants_ok = false;
  bool moebius_ok = false;

  bool passed() const {
    return positions_ok && tangents_ok && curvature_ok && monotone && invariants_ok && moebius_ok;
  }
};

/// Relative error when |target| >= small, absolute otherwise; `ok` set
/// against the matching tolerance.
double curvature_error(double k, double target, const VerifyTolerances& tol, bool& ok);

/// Checks a built curve on a sweep of tol.sweep_samples points.
VerificationReport verify(const SpiralCurve& curve, const VerifyTolerances& tol = {});

/// Same checks on a bare sample sequence (first/last sample are the
/// endpoints); Moebius residuals are not available and count as passing.
VerificationReport verify_samples(const std::vector<CurveSample>& samples,
                                  const WorldProblem& problem, const VerifyTolerances& tol = {});

}  // namespace g2spiral
