#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "g2spiral/errors.hpp"
#include "g2spiral/pipeline.hpp"

namespace g2spiral::io {

inline constexpr int kDumpVersion = 1;
inline constexpr int kDefaultSamples = 512;

/// Problem statement as read from JSON or command-line flags.
///
///   { "A": [x, y], "B": [x, y], "tangent1": t, "tangent2": t,
///     "angle_unit": "rad" | "deg", "k1": k, "k2": k, "n1": 0, "n2": 0,
///     "samples": 512,
///     "solver": { "theta_tol": ..., "max_iter": ..., "small_theta_threshold": ... } }
struct ProblemFile {
  WorldProblem problem;
  SolverConfig solver;
  int samples = kDefaultSamples;
};

ProblemFile parse_problem(const nlohmann::json& j);
/// Always written with "angle_unit": "rad".
nlohmann::json problem_to_json(const ProblemFile& p);

struct CurveDump {
  ProblemFile problem;
  MoebiusInvariants invariants;
  double theta = 0.0;
  double t0 = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  bool reflected = false;
  MoebiusMap map;
  std::vector<CurveSample> samples;
  VerificationReport report;
};

CurveDump make_dump(const SpiralCurve& curve, const ProblemFile& problem);

nlohmann::json dump_to_json(const CurveDump& d);
/// Throws std::runtime_error on schema or version mismatch.
CurveDump dump_from_json(const nlohmann::json& j);

std::string emit_json(const CurveDump& d);
/// Header "u,x,y,tau,k,s" then one row per sample.
std::string emit_csv(const CurveDump& d);

struct SvgReference {
  std::vector<Vec2> points;
  std::string label;
};

/// Polyline of the samples, dashed boundary circles of curvature, and an
/// optional dotted reference curve. The viewBox covers the samples with a 5%
/// margin.
std::string emit_svg(const CurveDump& d, std::span<const SvgReference> references = {});

struct ViewBox {
  double x = 0.0;
  double y = 0.0;
  double width = 1.0;
  double height = 1.0;
};

/// SVG coordinates (y flipped) of the sample bounding box plus margin.
ViewBox svg_view_box(std::span<const CurveSample> samples, double margin = 0.05);

/// Re-runs the sample-based checks on a dump.
VerificationReport reverify(const CurveDump& d, const VerifyTolerances& tol = {});

/// Exit codes are stable: 0 success, 1 usage or I/O, 2.. one per ErrorCode,
/// 20 when a curve was built but failed verification.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 20;
int exit_code(ErrorCode code);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace g2spiral::io
