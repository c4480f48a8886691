#include "g2spiral/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "g2spiral/errors.hpp"
#include "g2spiral/oracles.hpp"

namespace g2spiral {

SpiralCurve build(const BoundaryConditions& input, const SolverConfig& cfg,
                  const Similarity& chord_to_world) {
  validate(cfg);
  SpiralCurve curve;
  curve.bc = normalized(input);
  curve.chord_to_world = chord_to_world;
  curve.invariants = compute_invariants(curve.bc);

  const Canonical canon = canonicalize(curve.bc);
  curve.reflected = canon.reflected;
  const MoebiusInvariants inv = compute_invariants(canon.bc);
  check_feasibility(inv);

  const double theta = solve_theta(inv.Q, inv.omega, cfg);
  curve.arc = arc_for(theta, inv.Q);
  curve.to_unit_base = arc_to_unit_chord(curve.arc);
  curve.base = unit_chord_data(arc_boundary(curve.arc));
  curve.map = fit_map(unit_chord_data(canon.bc), curve.base);

  // Unit chord -> chord frame of the problem -> world.
  curve.from_unit_target = chord_to_world.after(Similarity{0.0, curve.bc.c, Vec2::Zero()});
  return curve;
}

SpiralCurve build(const Vec2& A, const Vec2& B, double tangent1, double tangent2, double k1,
                  double k2, int n1, int n2, const SolverConfig& cfg) {
  const ChordFrame frame = from_world(A, B, tangent1, tangent2, k1, k2, n1, n2);
  return build(frame.bc, cfg, frame.world_to_chord.inverse());
}

CurveSample eval(const SpiralCurve& curve, double u) {
  const InvoluteArc& arc = curve.arc;
  const double t = u >= 1.0 ? arc.t2 : arc.t1 + u * (arc.t2 - arc.t1);

  Jet j{reflected_offset_from_cusp(t), -t, -1.0 / t};
  j = curve.to_unit_base.apply(j);
  // The affine image of the endpoints is exact up to rounding; pin them so
  // the Moebius fixed points are hit exactly.
  if (u <= 0.0) j.point = Vec2(-1.0, 0.0);
  if (u >= 1.0) j.point = Vec2(1.0, 0.0);
  j = map_jet(curve.map, j);
  if (curve.reflected) j = mirror_x(j);
  j = curve.from_unit_target.apply(j);
  return {u, j.point, j.tau, j.k, 0.0};
}

std::vector<CurveSample> sample(const SpiralCurve& curve, int n) {
  if (n < 2) throw SpiralError(ErrorCode::DomainError, "sample requires n >= 2");
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double u = i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1);
    CurveSample cs = eval(curve, u);
    if (!out.empty()) {
      const CurveSample& prev = out.back();
      cs.s = prev.s + (cs.point - prev.point).norm();
      cs.tau = prev.tau + angle_diff(cs.tau, prev.tau);
    } else {
      cs.tau = reduce_angle(cs.tau, +1);
    }
    out.push_back(cs);
  }
  return out;
}

double curvature_error(double k, double target, const VerifyTolerances& tol, bool& ok) {
  if (std::abs(target) >= tol.small_curvature) {
    const double e = std::abs(k - target) / std::abs(target);
    ok = e <= tol.curvature_rel;
    return e;
  }
  const double e = std::abs(k - target);
  ok = e <= tol.curvature_abs;
  return e;
}

VerificationReport verify_samples(const std::vector<CurveSample>& samples,
                                  const WorldProblem& problem, const VerifyTolerances& tol) {
  if (samples.size() < 2) throw SpiralError(ErrorCode::DomainError, "need at least two samples");
  VerificationReport r;
  const CurveSample& first = samples.front();
  const CurveSample& last = samples.back();
  const double chord = (problem.B - problem.A).norm();

  r.position_residual =
      std::max((first.point - problem.A).norm(), (last.point - problem.B).norm()) / chord;
  r.positions_ok = r.position_residual <= tol.position;

  r.tangent_residual = std::max(std::abs(angle_diff(first.tau, problem.tangent1)),
                                std::abs(angle_diff(last.tau, problem.tangent2)));
  r.tangents_ok = r.tangent_residual <= tol.tangent;

  bool ok1 = false, ok2 = false;
  r.curvature_residual = std::max(curvature_error(first.k, problem.k1, tol, ok1),
                                  curvature_error(last.k, problem.k2, tol, ok2));
  r.curvature_ok = ok1 && ok2;

  const ChordFrame input = from_world(problem);
  r.input = compute_invariants(input.bc);
  const int M = r.input.M;

  r.monotone = true;
  r.worst_monotone_step = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double step = M * (samples[i].k - samples[i - 1].k);
    r.worst_monotone_step = std::min(r.worst_monotone_step, step);
    if (step < -tol.monotone_slack) r.monotone = false;
  }

  std::vector<Vec2> poly;
  poly.reserve(samples.size());
  for (const auto& s : samples) poly.push_back(s.point);
  // Winding counts are measured against the curve's own endpoints.
  const auto [n1, n2] = winding_counts(poly, first.point, last.point);
  r.measured_n1 = n1;
  r.measured_n2 = n2;
  const ChordFrame measured =
      from_world(first.point, last.point, first.tau, last.tau, first.k, last.k, n1, n2);
  r.recomputed = compute_invariants(measured.bc);
  r.q_residual = std::abs(r.recomputed.Q - r.input.Q);
  r.omega_residual = std::abs(r.recomputed.omega - r.input.omega);
  r.invariants_ok = r.q_residual <= tol.invariant && r.omega_residual <= tol.invariant &&
                    r.recomputed.M == r.input.M;
  r.moebius_ok = true;
  return r;
}

VerificationReport verify(const SpiralCurve& curve, const VerifyTolerances& tol) {
  std::vector<CurveSample> sweep;
  for (double u : graded_parameters(tol.sweep_samples)) sweep.push_back(eval(curve, u));
  VerificationReport r = verify_samples(sweep, curve.world_problem(), tol);
  r.moebius_residual_lambda = curve.map.residual_lambda;
  r.moebius_residual_rho = curve.map.residual_rho;
  r.moebius_ok = r.moebius_residual_lambda <= tol.moebius && r.moebius_residual_rho <= tol.moebius;
  return r;
}

}  // namespace g2spiral
