// Acceptance checks, one line per criterion. Exit status is the number of
// failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "g2spiral/io.hpp"
#include "g2spiral/oracles.hpp"
#include "g2spiral/solver.hpp"
#include "grid_oracle.hpp"
#include "support.hpp"

using namespace g2spiral;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] AC%d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(G2SPIRAL_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Symmetric point-to-curve distance between a built spiral and a reference.
double hausdorff(const SpiralCurve& curve, const std::function<Vec2(double)>& ref, double lo,
                 double hi, int n) {
  const auto spiral = [&](double u) { return eval(curve, u).point; };
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double u = static_cast<double>(i) / n;
    worst = std::max(worst, distance_to_curve(ref, lo, hi, spiral(u), 400));
    worst = std::max(worst, distance_to_curve(spiral, 0.0, 1.0, ref(lo + (hi - lo) * u), 400));
  }
  return worst;
}

// AC1 and the random half of AC5 share these builds.
struct RandomRun {
  int cases = 0;
  int failed = 0;
  int errors = 0;
  double seconds = 0.0;
  double pos = 0.0, tan = 0.0, curv = 0.0, q = 0.0, omega = 0.0;
};

RandomRun random_round_trip(int n) {
  RandomRun r;
  std::mt19937_64 rng(20240611);
  const auto start = std::chrono::steady_clock::now();
  for (; r.cases < n; ++r.cases) {
    const BoundaryConditions bc = testkit::random_feasible(rng);
    try {
      const VerificationReport v = verify(build(bc, {}, testkit::random_similarity(rng)));
      r.pos = std::max(r.pos, v.position_residual);
      r.tan = std::max(r.tan, v.tangent_residual);
      r.curv = std::max(r.curv, v.curvature_residual);
      r.q = std::max(r.q, v.q_residual);
      r.omega = std::max(r.omega, v.omega_residual);
      if (!v.passed()) ++r.failed;
    } catch (const SpiralError&) {
      ++r.errors;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void ac1(const RandomRun& r) {
  const VerifyTolerances tol;
  const bool ok = r.cases >= 1000 && r.failed == 0 && r.errors == 0 && r.pos <= tol.position &&
                  r.tan <= tol.tangent && r.seconds <= 10.0;
  report(1, "G2 round-trip", ok,
         fmt("%d cases, %d rejected by verify, %d errors, worst position %.2e (x 2c), tangent "
             "%.2e rad, curvature %.2e, %.2f s",
             r.cases, r.failed, r.errors, r.pos, r.tan, r.curv, r.seconds));
}

void ac2() {
  constexpr double T = 1.0;
  // Arcs before, across and after the inflection at s = ln 2, some curled.
  const std::pair<double, double> spans[] = {
      {0.02, 0.5}, {0.1, 0.6},  {0.3, 0.65}, {0.75, 1.5}, {1.0, 2.5},  {0.02, 1.0}, {0.05, 2.0},
      {0.1, 3.0},  {0.2, 1.5},  {0.3, 0.9},  {0.5, 0.9},  {0.01, 1.2}, {0.4, 4.0},  {0.6, 6.0},
      {0.05, 5.0}, {0.1, 7.0},  {0.8, 5.0},  {1.5, 6.0},  {0.25, 3.5}, {0.15, 8.0}};
  double worst = 0.0;
  int curled = 0;
  int errors = 0;
  for (auto [s1, s2] : spans) {
    try {
      const SampledArc sa = tractrix_bc(T, s1, s2);
      curled += sa.frame.bc.n1 + sa.frame.bc.n2 > 0;
      const SpiralCurve curve = build(sa.frame.bc, {}, sa.frame.world_to_chord.inverse());
      const double chord = 2.0 * sa.frame.bc.c / sa.frame.world_to_chord.scale;
      const auto ref = [T](double s) { return tractrix_eval(T, s).point; };
      worst = std::max(worst, hausdorff(curve, ref, s1, s2, 400) / chord);
    } catch (const SpiralError&) {
      ++errors;
    }
  }
  report(2, "tractrix coincidence", errors == 0 && worst <= 1e-6,
         fmt("20 arcs (%d curled), %d errors, worst distance %.2e x chord", curled, errors, worst));
}

void ac3() {
  const double expected[] = {1.430, 2.459, 3.471};
  double worst_root = 0.0;
  double worst_omega = 0.0;
  double worst_grid = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const double r = theta_roots(n);
    worst_root = std::max(worst_root, std::abs(r / kPi - expected[n - 1]));
    for (double Q : {-10.0, -1.0, -0.04}) {
      worst_omega = std::max(worst_omega, std::abs(omega_of_theta(r, Q) - n * kPi));
      const testkit::GridOracle oracle{Q};
      worst_grid = std::max(worst_grid, std::abs(oracle.scan(r, 20000).back() - n * kPi));
    }
  }
  report(3, "theta_n roots", worst_root <= 5e-4 && worst_omega <= 1e-9 && worst_grid <= 1e-9,
         fmt("roots within %.1e pi, |omega(theta_n) - n pi| <= %.1e (grid scan %.1e)", worst_root,
             worst_omega, worst_grid));
}

void ac4() {
  double min_cert = 1e300;
  int non_increasing = 0;
  for (double Q : {-1e6, -10.0, -1.0, -0.04, -1e-6}) {
    double prev = 0.0;
    for (int i = 1; i <= 10000; ++i) {
      const double theta = 8.0 * kPi * i / 10000;
      min_cert = std::min(min_cert, omega_derivative_certificate(theta, Q));
      const double w = omega_of_theta(theta, Q);
      non_increasing += !(w > prev);
      prev = w;
    }
  }
  report(4, "monotonicity certificate", min_cert >= -1e-12 && non_increasing == 0,
         fmt("min certificate %.3e on 5 x 10^4 grid, %d non-increasing steps", min_cert,
             non_increasing));
}

void ac5(const RandomRun& r) {
  // Curled oracle arcs: the built curve must reproduce the measured counts.
  struct Curled {
    SampledArc arc;
    const char* name;
  };
  std::vector<Curled> arcs = {{involute_bc(0.5, 8.0), "involute n1=1"},
                              {involute_bc(1.0, 14.0), "involute n1=2"},
                              {involute_bc(0.2, 20.0), "involute n1=3"},
                              {tractrix_bc(1.0, 0.8, 5.0), "tractrix"},
                              {tractrix_bc(1.0, 0.15, 8.0), "tractrix"}};
  int curled = 0;
  int count_mismatch = 0;
  double worst_q = r.q;
  double worst_omega = r.omega;
  for (const Curled& c : arcs) {
    const BoundaryConditions& bc = c.arc.frame.bc;
    curled += bc.n1 + bc.n2 > 0;
    const SpiralCurve curve = build(bc, {}, c.arc.frame.world_to_chord.inverse());
    const VerificationReport v = verify(curve);
    worst_q = std::max(worst_q, v.q_residual);
    worst_omega = std::max(worst_omega, v.omega_residual);
    std::vector<Vec2> poly;
    for (double u : graded_parameters(20000)) poly.push_back(eval(curve, u).point);
    const auto [n1, n2] = winding_counts(poly, curve.world_A(), curve.world_B());
    count_mismatch += n1 != bc.n1 || n2 != bc.n2;
  }
  const bool ok = worst_q <= 1e-8 && worst_omega <= 1e-8 && count_mismatch == 0 && curled >= 4;
  report(5, "invariant preservation", ok,
         fmt("%d random + %zu oracle builds, worst |dQ| %.2e, |domega| %.2e, %d curled with "
             "%d winding-count mismatches",
             r.cases, arcs.size(), worst_q, worst_omega, curled, count_mismatch));
}

void ac6() {
  const double a = std::abs(t0_of_theta(kPi, -1.0 / 3.0) - 2.0 * kPi);
  double b = 0.0;
  for (double theta : {1e-3, 0.1, 1.0, 3.0, 10.0, 25.0}) {
    b = std::max(b, std::abs(t0_of_theta(theta, -1e9) / theta - 1.0));
  }
  report(6, "t0 closed form", a <= 1e-12 && b <= 1e-4,
         fmt("|t0(pi, -1/3) - 2pi| = %.1e, Q = -1e9 relative gap %.1e", a, b));
}

void ac7() {
  double worst_z0 = 0.0;
  double worst_point = 0.0;
  for (auto [t1, t2] : {std::pair{0.3, 1.0}, {0.5, 2.0}, {1.0, 4.0}, {0.5, 8.0}, {3.0, 10.0},
                        {0.05, 6.0}, {10.0, 12.0}}) {
    const SampledArc sa = involute_bc(t1, t2);
    const SpiralCurve curve = build(sa.frame.bc, {}, sa.frame.world_to_chord.inverse());
    worst_z0 = std::max(worst_z0, std::abs(curve.map.z0));
    for (int i = 0; i <= 1000; ++i) {
      const double u = i / 1000.0;
      const Vec2 expected = reflected_offset_from_cusp(t1 + (t2 - t1) * u);
      worst_point = std::max(worst_point, (eval(curve, u).point - expected).norm());
    }
  }
  report(7, "self-interpolation", worst_z0 <= 1e-10 && worst_point <= 1e-9,
         fmt("7 involute arcs, max |z0| %.1e, max pointwise error %.1e", worst_z0, worst_point));
}

void ac8() {
  struct Control {
    const char* args;
    ErrorCode code;
  };
  const Control controls[] = {
      {"--c 1 --alpha 0 --beta 0 --k1 -1 --k2 1", ErrorCode::WrongWinding},
      {"--c 1 --alpha 0 --beta 0 --k1 0 --k2 1", ErrorCode::BiarcDegenerate},
      {"--c 1 --alpha 0.2 --beta 0.1 --k1 1 --k2 1", ErrorCode::NonMonotone},
  };
  std::string detail;
  bool ok = true;
  std::vector<int> seen;
  for (const Control& c : controls) {
    ErrorCode thrown = ErrorCode::DomainError;
    bool threw = false;
    std::istringstream in(c.args);
    std::string flag;
    double v[5];
    for (double& x : v) in >> flag >> x;
    try {
      build({v[0], v[1], v[2], v[3], v[4]});
    } catch (const SpiralError& e) {
      threw = true;
      thrown = e.code();
    }
    const int exit_status = run_cli(std::string("solve ") + c.args);
    const bool this_ok = threw && thrown == c.code && exit_status == io::exit_code(c.code) &&
                         exit_status != 0 &&
                         std::find(seen.begin(), seen.end(), exit_status) == seen.end();
    seen.push_back(exit_status);
    ok = ok && this_ok;
    detail += fmt("%s%s -> exit %d", detail.empty() ? "" : ", ", std::string(error_name(c.code)).c_str(), exit_status);
  }
  report(8, "negative controls", ok, detail);
}

bool csv_monotone(const fs::path& path, int& rows) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  std::vector<double> k;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cell;
    for (int col = 0; col < 5 && std::getline(ls, cell, ','); ++col) {
      if (col == 4) k.push_back(std::stod(cell));
    }
  }
  rows = static_cast<int>(k.size());
  if (k.size() < 2) return false;
  const int sign = k.back() > k.front() ? 1 : -1;
  for (size_t i = 1; i < k.size(); ++i) {
    if (sign * (k[i] - k[i - 1]) < -1e-10 * std::max(1.0, std::abs(k[i]))) return false;
  }
  return true;
}

void ac9() {
  const fs::path out = fs::temp_directory_path() / "g2spiral_acceptance_demo";
  fs::remove_all(out);
  std::string detail;
  bool ok = true;
  const std::pair<const char*, std::vector<const char*>> demos[] = {
      {"tractrix", {"tractrix"}},
      {"cornu", {"cornu"}},
      {"concentric", {"concentric_short", "concentric_long"}}};
  for (const auto& [demo, stems] : demos) {
    const int status = run_cli(fmt("demo %s --out %s", demo, out.c_str()));
    bool demo_ok = status == 0;
    for (const char* stem : stems) {
      int rows = 0;
      const fs::path svg = out / (std::string(stem) + ".svg");
      const fs::path csv = out / (std::string(stem) + ".csv");
      demo_ok = demo_ok && fs::exists(svg) && fs::file_size(svg) > 0 && fs::exists(csv) &&
                csv_monotone(csv, rows) && rows == io::kDefaultSamples;
    }
    ok = ok && demo_ok;
    detail += fmt("%s%s %s", detail.empty() ? "" : ", ", demo, demo_ok ? "ok" : "failed");
  }
  report(9, "demos", ok, detail + " (artifacts in " + out.string() + ")");
}

}  // namespace

int main() {
  const RandomRun run = random_round_trip(1000);
  ac1(run);
  ac2();
  ac3();
  ac4();
  ac5(run);
  ac6();
  ac7();
  ac8();
  ac9();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
