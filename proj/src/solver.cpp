#include "g2spiral/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "g2spiral/errors.hpp"
#include "g2spiral/geometry.hpp"
#include "g2spiral/involute.hpp"

namespace g2spiral {

void validate(const SolverConfig& cfg) {
  if (!(cfg.theta_tol > 0.0) || cfg.max_iter < 1 || !(cfg.small_theta_threshold >= 0.0)) {
    throw SpiralError(ErrorCode::DomainError, "invalid solver configuration");
  }
}

double t0_excess(double theta, double Q) {
  if (!(Q < 0.0)) throw SpiralError(ErrorCode::DomainError, "t0_of_theta requires Q < 0");
  if (!(theta > 0.0)) throw SpiralError(ErrorCode::DomainError, "t0_of_theta requires theta > 0");
  // theta^2 - sin^2 = (theta - sin)(theta + sin); the first factor is tiny near 0.
  const double s = std::sin(theta);
  double theta_minus_sin;
  if (theta < 0.25) {
    const double t2 = theta * theta;
    double term = theta * t2 / 6.0;
    theta_minus_sin = term;
    for (int n = 2; n < 10; ++n) {
      term *= -t2 / ((2.0 * n) * (2.0 * n + 1.0));
      theta_minus_sin += term;
    }
  } else {
    theta_minus_sin = theta - s;
  }
  return theta_minus_sin * (theta + s) / (-Q);
}

double t0_of_theta(double theta, double Q) {
  return std::sqrt(theta * theta + t0_excess(theta, Q));
}

InvoluteArc arc_for(double theta, double Q) {
  const double excess = t0_excess(theta, Q);
  const double t0 = std::sqrt(theta * theta + excess);
  InvoluteArc arc = make_arc(t0, theta);
  arc.t1 = excess / (t0 + theta);
  if (!(arc.t1 > 0.0)) throw SpiralError(ErrorCode::DomainError, "arc start underflows to zero");
  return arc;
}

double omega_of_theta(double theta, double Q, const SolverConfig& cfg) {
  if (!(Q < 0.0)) throw SpiralError(ErrorCode::DomainError, "omega_of_theta requires Q < 0");
  if (!(theta >= 0.0)) throw SpiralError(ErrorCode::DomainError, "omega_of_theta requires theta >= 0");
  if (theta == 0.0) return 0.0;
  if (theta < cfg.small_theta_threshold) {
    // theta - pi/2 + atan(x) == theta - atan(1/x) for x > 0; the left form
    // cancels against pi/2.
    const double x_theta = 1.5 + (8.0 * Q - 5.0) / (40.0 * Q) * theta * theta;
    return theta - std::atan(theta / x_theta);
  }
  const double t0 = t0_of_theta(theta, Q);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double smc = sin_minus_x_cos(theta);
  const double num = s * (t0 * c + smc);
  const double den = t0 * s * s - c * smc;
  if (!(den > 0.0)) {
    throw SpiralError(ErrorCode::ConsistencyFailure,
                      "non-positive denominator in omega(theta) at theta = " + std::to_string(theta));
  }
  // theta - pi/2 + atan(num / den) with den > 0
  return theta + std::atan2(-den, num);
}

double theta_roots(int n) {
  if (n < 0) throw SpiralError(ErrorCode::DomainError, "theta_roots requires n >= 0");
  if (n == 0) return 0.0;
  // Root of f(x) = sin x - x cos x in (n pi, (n + 1/2) pi).
  const double m = (2.0 * n + 1.0) * kPi;
  double lo = n * kPi;
  double hi = 0.5 * m;
  const double sign_hi = (n % 2 == 0) ? 1.0 : -1.0;  // sign of f(hi) = sin(hi)
  double x = 0.5 * m - 2.0 / m;
  for (int it = 0; it < 100; ++it) {
    const double f = sin_minus_x_cos(x);
    if (f == 0.0) return x;
    if ((f > 0.0) == (sign_hi > 0.0)) {
      hi = x;
    } else {
      lo = x;
    }
    const double df = x * std::sin(x);
    double next = x - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * x) return next;
    x = next;
  }
  return x;
}

double solve_theta(double Q, double omega, const SolverConfig& cfg) {
  validate(cfg);
  if (!(Q < 0.0)) throw SpiralError(ErrorCode::DomainError, "solve_theta requires Q < 0");
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw SpiralError(ErrorCode::DomainError, "solve_theta requires a finite omega > 0");
  }

  int i = static_cast<int>(std::floor(omega / kPi));
  int j = i + 1;
  double lo = theta_roots(i);
  double hi = theta_roots(j);
  // The identity omega(theta_n) = n pi selects the bracket; widen if it fails.
  for (int widen = 0; widen < 8; ++widen) {
    const bool lo_ok = omega_of_theta(lo, Q, cfg) <= omega;
    const bool hi_ok = omega_of_theta(hi, Q, cfg) >= omega;
    if (lo_ok && hi_ok) break;
    if (!lo_ok && i > 0) lo = theta_roots(--i);
    if (!hi_ok) hi = theta_roots(++j);
  }
  if (!(omega_of_theta(lo, Q, cfg) <= omega && omega_of_theta(hi, Q, cfg) >= omega)) {
    throw SpiralError(ErrorCode::NoConvergence, "could not bracket omega");
  }

  for (int it = 0; it < cfg.max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= cfg.theta_tol || mid <= lo || mid >= hi) return mid;
    if (omega_of_theta(mid, Q, cfg) < omega) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double mid = 0.5 * (lo + hi);
  if (hi - lo <= cfg.theta_tol) return mid;
  throw SpiralError(ErrorCode::NoConvergence,
                    "bisection did not converge in " + std::to_string(cfg.max_iter) + " iterations");
}

double omega_derivative_certificate(double theta, double Q) {
  const double q = std::abs(Q);
  const double s = std::sin(theta);
  const double sinc = s / theta;
  return sinc * sinc * (s * s + 2.0 * sinc * std::cos(theta) - 3.0 - q) + 1.0 + q;
}

}  // namespace g2spiral
