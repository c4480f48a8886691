#pragma once

#include "g2spiral/involute.hpp"

namespace g2spiral {

struct SolverConfig {
  double theta_tol = 1e-13;
  int max_iter = 200;
  /// Below this theta, omega_of_theta uses the small-angle expansion, whose
  /// absolute error grows like theta^3 / |Q|.
  double small_theta_threshold = 1e-7;
};

/// Throws DomainError for an invalid configuration.
void validate(const SolverConfig& cfg);

/// Midpoint t0 of the involute arc [t0 - theta, t0 + theta] on which the
/// invariant Q is realized. Always greater than theta.
double t0_of_theta(double theta, double Q);

/// t0^2 - theta^2 for the same family, without cancellation near theta = 0.
double t0_excess(double theta, double Q);

/// The arc [t0 - theta, t0 + theta] with t1 computed as excess / (t0 + theta).
InvoluteArc arc_for(double theta, double Q);

/// Cumulative omega of the arc selected by t0_of_theta(theta, Q). Continuous,
/// strictly increasing, omega(0) = 0.
double omega_of_theta(double theta, double Q, const SolverConfig& cfg = {});

/// n-th positive root of tan(x) = x, n >= 1. n = 0 returns 0.
double theta_roots(int n);

/// Inverts omega_of_theta for a canonical problem (Q < 0, omega > 0).
double solve_theta(double Q, double omega, const SolverConfig& cfg = {});

/// Quantity with the sign of d omega / d theta:
/// sinc^2 (sin^2 + 2 sinc cos - 3 - |Q|) + 1 + |Q|.
double omega_derivative_certificate(double theta, double Q);

}  // namespace g2spiral
