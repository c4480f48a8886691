#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "g2spiral/errors.hpp"
#include "g2spiral/involute.hpp"
#include "g2spiral/moebius.hpp"
#include "g2spiral/oracles.hpp"
#include "g2spiral/solver.hpp"
#include "support.hpp"

using namespace g2spiral;

namespace {

// Algebraic least-squares circle x^2 + y^2 + D x + E y + F = 0; returns the
// largest |distance - radius| of the points.
double circle_fit_residual(const std::vector<Vec2>& pts) {
  Eigen::MatrixXd A(pts.size(), 3);
  Eigen::VectorXd b(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    A.row(i) << pts[i].x(), pts[i].y(), 1.0;
    b(i) = -pts[i].squaredNorm();
  }
  const Eigen::Vector3d sol = A.colPivHouseholderQr().solve(b);
  const Vec2 centre = -0.5 * sol.head<2>();
  const double r = std::sqrt(centre.squaredNorm() - sol(2));
  double worst = 0.0;
  for (const Vec2& p : pts) worst = std::max(worst, std::abs((p - centre).norm() - r));
  return worst / r;
}

MoebiusMap map_with(Complex z0) {
  MoebiusMap m;
  m.z0 = z0;
  return m;
}

}  // namespace

TEST(FitMap, EqualDataGivesIdentity) {
  const UnitChordData d{0.4, -0.2, -1.5, 2.0};
  const MoebiusMap m = fit_map(d, d);
  EXPECT_LT(std::abs(m.z0), 1e-15);
  EXPECT_NEAR(m.lambda, 0.0, 1e-15);
  EXPECT_NEAR(m.rho_scale, 1.0, 1e-15);
}

TEST(FitMap, InconsistentDataRejected) {
  // Same alpha, different beta: no map can rotate one end without the other.
  const UnitChordData base{0.4, -0.2, -1.5, 2.0};
  const UnitChordData target{0.4, 0.5, -1.5, 2.0};
  try {
    fit_map(target, base);
    FAIL() << "expected ConsistencyFailure";
  } catch (const SpiralError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConsistencyFailure);
  }
}

TEST(FitMap, SelfInterpolationOfInvoluteArc) {
  for (double t0 : {0.8, 2.0, 5.0, 11.0}) {
    for (double theta : {0.1, 0.5, 0.7 * t0}) {
      const SampledArc sa = involute_bc(t0 - theta, t0 + theta, 2001);
      const InvoluteArc arc = make_arc(t0, theta);
      const MoebiusMap m = fit_map(unit_chord_data(sa.frame.bc), unit_chord_data(arc_boundary(arc)));
      EXPECT_LT(std::abs(m.z0), 1e-10) << t0 << " " << theta;
    }
  }
}

TEST(MapPoint, FixedPointsAndIdentity) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-0.9, 0.9);
  for (int i = 0; i < 50; ++i) {
    const MoebiusMap m = map_with({d(rng), d(rng)});
    EXPECT_LT(std::abs(map_point(m, 1.0) - 1.0), 1e-15);
    EXPECT_LT(std::abs(map_point(m, -1.0) + 1.0), 1e-15);
    const Complex z{d(rng), d(rng)};
    EXPECT_EQ(map_point(map_with(0.0), z), z);
    // The inverse map uses -z0.
    const MoebiusMap inv = map_with(-m.z0);
    EXPECT_LT(std::abs(map_point(inv, map_point(m, z)) - z), 1e-13);
  }
}

TEST(MapPoint, CirclesStayCircles) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> d(-0.8, 0.8), r(0.1, 3.0), off(-4.0, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    const MoebiusMap m = map_with({d(rng), d(rng)});
    const Complex centre{off(rng), off(rng)};
    const double radius = r(rng);
    std::vector<Vec2> image;
    for (int i = 0; i < 20; ++i) {
      const Complex z = centre + std::polar(radius, kTwoPi * i / 20);
      if (std::abs(1.0 + m.z0 * z) < 0.05) continue;
      image.push_back(to_vec(map_point(m, z)));
    }
    EXPECT_LT(circle_fit_residual(image), 1e-10);
  }
}

TEST(MapPoint, PoleRejected) {
  const MoebiusMap m = map_with({0.5, 0.0});
  EXPECT_THROW(map_point(m, -2.0), SpiralError);
}

TEST(MapJet, IdentityLeavesJet) {
  const Jet j{Vec2(0.3, -0.2), 1.1, -2.5};
  const Jet out = map_jet(map_with(0.0), j);
  EXPECT_LT((out.point - j.point).norm(), 1e-15);
  EXPECT_NEAR(out.tau, j.tau, 1e-15);
  EXPECT_NEAR(out.k, j.k, 1e-15);
}

TEST(MapJet, FiniteDifferences) {
  // Image of a circle arc z(s) = centre + r e^{i s / r}, differenced along s.
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> d(-0.6, 0.6), r(0.3, 2.0);
  // Second differences at h = 1e-5 carry ~eps/h^2 rounding, so curvature
  // uses a wider step.
  constexpr double h = 1e-5;
  constexpr double hk = 1e-4;
  for (int trial = 0; trial < 30; ++trial) {
    const MoebiusMap m = map_with({d(rng), d(rng)});
    const Complex centre{d(rng), d(rng)};
    const double radius = r(rng);
    const auto curve = [&](double s) { return centre + std::polar(radius, s / radius); };
    const double s = d(rng);
    const Complex z = curve(s);
    if (std::abs(1.0 + m.z0 * z) < 0.2) continue;
    const Jet in{to_vec(z), s / radius + kPi / 2, 1.0 / radius};
    const Jet out = map_jet(m, in);
    const Complex d1 = (map_point(m, curve(s + h)) - map_point(m, curve(s - h))) / (2.0 * h);
    EXPECT_LT(testkit::angle_error(std::arg(d1), out.tau), 1e-6);
    const Complex a = map_point(m, curve(s - hk));
    const Complex b = map_point(m, curve(s));
    const Complex c = map_point(m, curve(s + hk));
    const Complex e1 = (c - a) / (2.0 * hk);
    const Complex e2 = (c - 2.0 * b + a) / (hk * hk);
    const double k = std::imag(std::conj(e1) * e2) / std::pow(std::abs(e1), 3);
    EXPECT_NEAR(k, out.k, 1e-6 * std::max(1.0, std::abs(k)));
  }
}

TEST(MapJet, TangentAtFixedPoint) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> d(-0.9, 0.9);
  for (int i = 0; i < 50; ++i) {
    const Complex z0{d(rng), d(rng)};
    const Jet out = map_jet(map_with(z0), Jet{Vec2(1.0, 0.0), 0.0, 0.0});
    EXPECT_LT(testkit::angle_error(out.tau, std::arg((1.0 - z0) / (1.0 + z0))), 1e-13);
  }
}
