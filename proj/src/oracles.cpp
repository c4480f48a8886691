#include "g2spiral/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "g2spiral/errors.hpp"
#include "g2spiral/involute.hpp"

namespace g2spiral {

std::vector<double> graded_parameters(int n) {
  n = std::max(n, 2);
  std::vector<double> u;
  u.reserve(static_cast<std::size_t>(n) + 24);
  for (int i = 0; i < n; ++i) u.push_back(i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1));
  const double spacing = 1.0 / (n - 1);
  for (int e = 5; e <= 15; ++e) {
    const double d = std::pow(10.0, -e);
    if (d >= spacing) continue;
    u.push_back(d);
    u.push_back(1.0 - d);
  }
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

TractrixPoint tractrix_eval(double T, double s) {
  if (!(T > 0.0) || !(s >= 0.0) || !std::isfinite(s)) {
    throw SpiralError(ErrorCode::DomainError, "tractrix_eval requires T > 0 and s >= 0");
  }
  const double e = std::exp(-s / T);
  const double one_minus_e = -std::expm1(-s / T);
  const double psi = std::sqrt(std::expm1(s / T));
  TractrixPoint p;
  p.s = s;
  p.psi = psi;
  p.point = {2.0 * T * e * (psi * std::sin(psi) + std::cos(psi)),
             2.0 * T * e * (std::sin(psi) - psi * std::cos(psi))};
  p.tau = psi - std::acos(2.0 * e - 1.0) + kPi;
  // 1 - (1 - 2e)^2 = 4 e (1 - e)
  const double root = 2.0 * std::sqrt(e * one_minus_e);
  p.k = root > 0.0 ? (1.0 - 2.0 * e) / (T * root) : -std::numeric_limits<double>::infinity();
  return p;
}

namespace {

SampledArc sampled_arc(const std::function<Jet(double)>& f, double lo, double hi, int samples) {
  if (samples < 2) throw SpiralError(ErrorCode::DomainError, "need at least two samples");
  SampledArc out;
  for (double u : graded_parameters(samples)) {
    out.polyline.push_back(f(u >= 1.0 ? hi : lo + (hi - lo) * u).point);
  }
  const Jet a = f(lo);
  const Jet b = f(hi);
  const auto [n1, n2] = winding_counts(out.polyline, a.point, b.point);
  out.frame = from_world(a.point, b.point, a.tau, b.tau, a.k, b.k, n1, n2);
  return out;
}

}  // namespace

SampledArc tractrix_bc(double T, double s1, double s2, int samples) {
  if (!(s1 > 0.0) || !(s2 > s1)) {
    throw SpiralError(ErrorCode::DomainError, "tractrix_bc requires 0 < s1 < s2");
  }
  return sampled_arc(
      [T](double s) {
        const TractrixPoint p = tractrix_eval(T, s);
        return Jet{p.point, p.tau, p.k};
      },
      s1, s2, samples);
}

SampledArc involute_bc(double t1, double t2, int samples) {
  if (!(t1 > 0.0) || !(t2 > t1)) {
    throw SpiralError(ErrorCode::DomainError, "involute_bc requires 0 < t1 < t2");
  }
  return sampled_arc([](double t) { return Jet{reflected_offset_from_cusp(t), -t, -1.0 / t}; }, t1,
                     t2, samples);
}

namespace {

// 7-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 7> kGLNodes = {
    -0.9491079123427585, -0.7415311855993945, -0.4058451513773972, 0.0,
    0.4058451513773972,  0.7415311855993945,  0.9491079123427585};
constexpr std::array<double, 7> kGLWeights = {
    0.1294849661688697, 0.2797053914892766, 0.3818300505051189, 0.4179591836734694,
    0.3818300505051189, 0.2797053914892766, 0.1294849661688697};

Vec2 gauss7(const std::function<Vec2(double)>& f, double lo, double hi) {
  const double h = 0.5 * (hi - lo);
  const double m = 0.5 * (hi + lo);
  Vec2 sum = Vec2::Zero();
  for (std::size_t i = 0; i < kGLNodes.size(); ++i) sum += kGLWeights[i] * f(m + h * kGLNodes[i]);
  return h * sum;
}

Vec2 adaptive_gauss(const std::function<Vec2(double)>& f, double lo, double hi, const Vec2& whole,
                    double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const Vec2 left = gauss7(f, lo, mid);
  const Vec2 right = gauss7(f, mid, hi);
  const Vec2 both = left + right;
  if (depth <= 0 || (both - whole).lpNorm<Eigen::Infinity>() <= tol) return both;
  return adaptive_gauss(f, lo, mid, left, 0.5 * tol, depth - 1) +
         adaptive_gauss(f, mid, hi, right, 0.5 * tol, depth - 1);
}

}  // namespace

Jet cornu_eval(double a, double s) {
  if (!(a > 0.0) || !std::isfinite(s)) {
    throw SpiralError(ErrorCode::DomainError, "cornu_eval requires a > 0 and finite s");
  }
  const double a2 = a * a;
  Jet j;
  j.k = s / a2;
  j.tau = s * s / (2.0 * a2);
  if (s == 0.0) return j;
  const auto integrand = [a2](double u) {
    const double tau = u * u / (2.0 * a2);
    return Vec2(std::cos(tau), std::sin(tau));
  };
  // Split so each panel spans at most ~1 radian of turning at its far end.
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(s) * std::abs(s) / a2)));
  Vec2 sum = Vec2::Zero();
  for (int i = 0; i < panels; ++i) {
    const double lo = s * i / panels;
    const double hi = s * (i + 1) / panels;
    sum += adaptive_gauss(integrand, lo, hi, gauss7(integrand, lo, hi), 1e-13 / panels, 30);
  }
  j.point = sum;
  return j;
}

SampledArc cornu_bc(double a, double s1, double s2, int samples) {
  if (!(s2 > s1)) throw SpiralError(ErrorCode::DomainError, "cornu_bc requires s1 < s2");
  return sampled_arc([a](double s) { return cornu_eval(a, s); }, s1, s2, samples);
}

namespace {

// Crossings of the polyline with the ray origin + r dir, r > 0. Vertices
// within `band` of the ray's line are treated as lying on it: only sign
// changes between vertices clearly on either side count, so rounding noise
// near an endpoint cannot fake a crossing. `skip` is the vertex at the origin.
std::optional<int> count_ray_crossings(std::span<const Vec2> poly, const Vec2& origin,
                                       const Vec2& dir, std::size_t skip, double band) {
  const auto side = [&](const Vec2& p) {
    const Vec2 d = p - origin;
    return dir.x() * d.y() - dir.y() * d.x();
  };
  const auto ahead = [&](const Vec2& p) { return dir.dot(p - origin); };

  // A vertex grazes when it is on the ray both in distance and in angle;
  // turning the ray by 1e-9 rad always separates such a vertex.
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    const double sd = std::abs(side(poly[i]));
    if (sd < band && sd < 1e-10 * ahead(poly[i])) return std::nullopt;
  }

  int count = 0;
  std::optional<std::size_t> prev;
  double prev_side = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i == skip) continue;
    const double si = side(poly[i]);
    if (std::abs(si) < band) continue;
    if (prev && (si > 0.0) != (prev_side > 0.0)) {
      const double lam = prev_side / (prev_side - si);
      const Vec2 x = poly[*prev] + lam * (poly[i] - poly[*prev]);
      if (ahead(x) > band) ++count;
    }
    prev = i;
    prev_side = si;
  }
  return count;
}

}  // namespace

std::pair<int, int> winding_counts(std::span<const Vec2> polyline, const Vec2& A, const Vec2& B) {
  if (polyline.size() < 2) throw SpiralError(ErrorCode::DomainError, "polyline too short");
  const Vec2 chord = B - A;
  const double len = chord.norm();
  if (!(len > 0.0)) throw SpiralError(ErrorCode::CoincidentEndpoints, "A and B coincide");
  const Vec2 e = chord / len;
  const double graze = 1e-12 * len;
  const std::size_t last = polyline.size() - 1;

  const auto count = [&](const Vec2& origin, const Vec2& dir, std::size_t skip) {
    if (auto n = count_ray_crossings(polyline, origin, dir, skip, graze)) return *n;
    const Vec2 turned = Eigen::Rotation2Dd(1e-9) * dir;
    if (auto n = count_ray_crossings(polyline, origin, turned, skip, graze)) return *n;
    throw SpiralError(ErrorCode::GrazingUnresolved, "polyline vertex lies on a chord ray");
  };
  return {count(A, -e, 0), count(B, e, last)};
}

double distance_to_curve(const std::function<Vec2(double)>& f, double lo, double hi, const Vec2& p,
                         int seeds) {
  seeds = std::max(seeds, 3);
  const auto dist = [&](double x) { return (f(x) - p).norm(); };
  const auto node = [&](int i) { return lo + (hi - lo) * i / (seeds - 1); };
  std::vector<double> d(seeds);
  for (int i = 0; i < seeds; ++i) d[i] = dist(node(i));

  // Golden section on [node(i-1), node(i+1)] around each local minimum of the
  // seed distances; on a tightly wound curve the nearest seed may sit on the
  // wrong turn.
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double best = *std::min_element(d.begin(), d.end());
  for (int i = 0; i < seeds; ++i) {
    if ((i > 0 && d[i - 1] < d[i]) || (i + 1 < seeds && d[i + 1] < d[i])) continue;
    double a = node(std::max(i - 1, 0));
    double b = node(std::min(i + 1, seeds - 1));
    double x1 = b - g * (b - a);
    double x2 = a + g * (b - a);
    double f1 = dist(x1);
    double f2 = dist(x2);
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - g * (b - a);
        f1 = dist(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + g * (b - a);
        f2 = dist(x2);
      }
    }
    best = std::min({best, f1, f2});
  }
  return best;
}

}  // namespace g2spiral
