#include "g2spiral/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace g2spiral::io {

using nlohmann::json;

namespace {

Vec2 read_point(const json& j, const char* key) {
  const auto& a = j.at(key);
  if (!a.is_array() || a.size() != 2) {
    throw std::runtime_error(std::string("\"") + key + "\" must be a two-element array");
  }
  return {a[0].get<double>(), a[1].get<double>()};
}

json point_json(const Vec2& p) { return json::array({p.x(), p.y()}); }

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

json report_json(const VerificationReport& r) {
  return {
      {"passed", r.passed()},
      {"position_residual", r.position_residual},
      {"tangent_residual", r.tangent_residual},
      {"curvature_residual", r.curvature_residual},
      {"curvature_ok", r.curvature_ok},
      {"monotone", r.monotone},
      {"worst_monotone_step", r.worst_monotone_step},
      {"measured_n1", r.measured_n1},
      {"measured_n2", r.measured_n2},
      {"Q_input", r.input.Q},
      {"omega_input", r.input.omega},
      {"Q_recomputed", r.recomputed.Q},
      {"omega_recomputed", r.recomputed.omega},
      {"q_residual", r.q_residual},
      {"omega_residual", r.omega_residual},
      {"moebius_residual_lambda", r.moebius_residual_lambda},
      {"moebius_residual_rho", r.moebius_residual_rho},
      {"positions_ok", r.positions_ok},
      {"tangents_ok", r.tangents_ok},
      {"invariants_ok", r.invariants_ok},
      {"moebius_ok", r.moebius_ok},
  };
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.position_residual = j.at("position_residual").get<double>();
  r.tangent_residual = j.at("tangent_residual").get<double>();
  r.curvature_residual = j.at("curvature_residual").get<double>();
  r.curvature_ok = j.at("curvature_ok").get<bool>();
  r.monotone = j.at("monotone").get<bool>();
  r.worst_monotone_step = j.at("worst_monotone_step").get<double>();
  r.measured_n1 = j.at("measured_n1").get<int>();
  r.measured_n2 = j.at("measured_n2").get<int>();
  r.input.Q = j.at("Q_input").get<double>();
  r.input.omega = j.at("omega_input").get<double>();
  r.recomputed.Q = j.at("Q_recomputed").get<double>();
  r.recomputed.omega = j.at("omega_recomputed").get<double>();
  r.q_residual = j.at("q_residual").get<double>();
  r.omega_residual = j.at("omega_residual").get<double>();
  r.moebius_residual_lambda = j.at("moebius_residual_lambda").get<double>();
  r.moebius_residual_rho = j.at("moebius_residual_rho").get<double>();
  r.positions_ok = j.at("positions_ok").get<bool>();
  r.tangents_ok = j.at("tangents_ok").get<bool>();
  r.invariants_ok = j.at("invariants_ok").get<bool>();
  r.moebius_ok = j.at("moebius_ok").get<bool>();
  return r;
}

}  // namespace

ProblemFile parse_problem(const json& j) {
  ProblemFile p;
  const std::string unit = j.value("angle_unit", std::string("rad"));
  double to_rad = 1.0;
  if (unit == "deg") {
    to_rad = kPi / 180.0;
  } else if (unit != "rad") {
    throw std::runtime_error("angle_unit must be \"rad\" or \"deg\"");
  }
  p.problem.A = read_point(j, "A");
  p.problem.B = read_point(j, "B");
  p.problem.tangent1 = j.at("tangent1").get<double>() * to_rad;
  p.problem.tangent2 = j.at("tangent2").get<double>() * to_rad;
  p.problem.k1 = j.at("k1").get<double>();
  p.problem.k2 = j.at("k2").get<double>();
  p.problem.n1 = j.value("n1", 0);
  p.problem.n2 = j.value("n2", 0);
  p.samples = j.value("samples", kDefaultSamples);
  if (p.samples < 2) throw std::runtime_error("samples must be at least 2");
  if (j.contains("solver")) {
    const json& s = j.at("solver");
    p.solver.theta_tol = s.value("theta_tol", p.solver.theta_tol);
    p.solver.max_iter = s.value("max_iter", p.solver.max_iter);
    p.solver.small_theta_threshold = s.value("small_theta_threshold", p.solver.small_theta_threshold);
  }
  return p;
}

json problem_to_json(const ProblemFile& p) {
  return {
      {"A", point_json(p.problem.A)},
      {"B", point_json(p.problem.B)},
      {"tangent1", p.problem.tangent1},
      {"tangent2", p.problem.tangent2},
      {"angle_unit", "rad"},
      {"k1", p.problem.k1},
      {"k2", p.problem.k2},
      {"n1", p.problem.n1},
      {"n2", p.problem.n2},
      {"samples", p.samples},
      {"solver",
       {{"theta_tol", p.solver.theta_tol},
        {"max_iter", p.solver.max_iter},
        {"small_theta_threshold", p.solver.small_theta_threshold}}},
  };
}

CurveDump make_dump(const SpiralCurve& curve, const ProblemFile& problem) {
  CurveDump d;
  d.problem = problem;
  d.invariants = curve.invariants;
  d.theta = curve.arc.theta;
  d.t0 = curve.arc.t0;
  d.t1 = curve.arc.t1;
  d.t2 = curve.arc.t2;
  d.reflected = curve.reflected;
  d.map = curve.map;
  d.samples = sample(curve, problem.samples);
  d.report = verify(curve);
  return d;
}

json dump_to_json(const CurveDump& d) {
  json samples = json::array();
  for (const auto& s : d.samples) {
    samples.push_back({{"u", s.u}, {"x", s.point.x()}, {"y", s.point.y()}, {"tau", s.tau},
                       {"k", s.k}, {"s", s.s}});
  }
  return {
      {"format", "g2spiral.curve_dump"},
      {"version", kDumpVersion},
      {"problem", problem_to_json(d.problem)},
      {"invariants", {{"Q", d.invariants.Q}, {"omega", d.invariants.omega}, {"M", d.invariants.M}}},
      {"solution",
       {{"theta", d.theta}, {"t0", d.t0}, {"t1", d.t1}, {"t2", d.t2}, {"reflected", d.reflected}}},
      {"moebius",
       {{"z0", json::array({d.map.z0.real(), d.map.z0.imag()})},
        {"lambda", d.map.lambda},
        {"rho", d.map.rho_scale},
        {"residual_lambda", d.map.residual_lambda},
        {"residual_rho", d.map.residual_rho}}},
      {"samples", std::move(samples)},
      {"verification", report_json(d.report)},
  };
}

CurveDump dump_from_json(const json& j) {
  if (j.value("format", std::string()) != "g2spiral.curve_dump") {
    throw std::runtime_error("not a g2spiral curve dump");
  }
  if (j.value("version", 0) != kDumpVersion) {
    throw std::runtime_error("unsupported curve dump version");
  }
  CurveDump d;
  d.problem = parse_problem(j.at("problem"));
  const json& inv = j.at("invariants");
  d.invariants = {inv.at("Q").get<double>(), inv.at("omega").get<double>(), inv.at("M").get<int>()};
  const json& sol = j.at("solution");
  d.theta = sol.at("theta").get<double>();
  d.t0 = sol.at("t0").get<double>();
  d.t1 = sol.at("t1").get<double>();
  d.t2 = sol.at("t2").get<double>();
  d.reflected = sol.at("reflected").get<bool>();
  const json& m = j.at("moebius");
  d.map.z0 = {m.at("z0")[0].get<double>(), m.at("z0")[1].get<double>()};
  d.map.lambda = m.at("lambda").get<double>();
  d.map.rho_scale = m.at("rho").get<double>();
  d.map.residual_lambda = m.at("residual_lambda").get<double>();
  d.map.residual_rho = m.at("residual_rho").get<double>();
  for (const json& s : j.at("samples")) {
    CurveSample cs;
    cs.u = s.at("u").get<double>();
    cs.point = {s.at("x").get<double>(), s.at("y").get<double>()};
    cs.tau = s.at("tau").get<double>();
    cs.k = s.at("k").get<double>();
    cs.s = s.at("s").get<double>();
    d.samples.push_back(cs);
  }
  d.report = report_from_json(j.at("verification"));
  return d;
}

std::string emit_json(const CurveDump& d) { return dump_to_json(d).dump(2) + "\n"; }

std::string emit_csv(const CurveDump& d) {
  std::ostringstream os;
  os << "u,x,y,tau,k,s\n";
  for (const auto& s : d.samples) {
    os << fmt(s.u) << ',' << fmt(s.point.x()) << ',' << fmt(s.point.y()) << ',' << fmt(s.tau)
       << ',' << fmt(s.k) << ',' << fmt(s.s) << '\n';
  }
  return os.str();
}

ViewBox svg_view_box(std::span<const CurveSample> samples, double margin) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : samples) {
    xmin = std::min(xmin, s.point.x());
    xmax = std::max(xmax, s.point.x());
    ymin = std::min(ymin, -s.point.y());
    ymax = std::max(ymax, -s.point.y());
  }
  if (samples.empty()) return {};
  const double extent = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double pad = margin * extent;
  return {xmin - pad, ymin - pad, xmax - xmin + 2.0 * pad, ymax - ymin + 2.0 * pad};
}

std::string emit_svg(const CurveDump& d, std::span<const SvgReference> references) {
  const ViewBox vb = svg_view_box(d.samples);
  const double stroke = 0.004 * std::max(vb.width, vb.height);
  std::ostringstream os;
  os << std::setprecision(10);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << vb.x << ' ' << vb.y << ' '
     << vb.width << ' ' << vb.height << "\">\n";

  const auto polyline = [&](auto&& points, const std::string& style) {
    os << "  <polyline fill=\"none\" " << style << " points=\"";
    bool first = true;
    for (const Vec2& p : points) {
      os << (first ? "" : " ") << p.x() << ',' << -p.y();
      first = false;
    }
    os << "\"/>\n";
  };

  // Boundary circles of curvature.
  const WorldProblem& wp = d.problem.problem;
  const auto circle = [&](const Vec2& p, double tau, double k) {
    if (std::abs(k) < 1e-12) return;
    const Vec2 centre = p + Vec2(-std::sin(tau), std::cos(tau)) / k;
    os << "  <circle cx=\"" << centre.x() << "\" cy=\"" << -centre.y() << "\" r=\""
       << 1.0 / std::abs(k) << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"" << stroke
       << "\" stroke-dasharray=\"" << 4 * stroke << ' ' << 3 * stroke << "\"/>\n";
  };
  circle(wp.A, wp.tangent1, wp.k1);
  circle(wp.B, wp.tangent2, wp.k2);

  std::vector<Vec2> pts;
  pts.reserve(d.samples.size());
  for (const auto& s : d.samples) pts.push_back(s.point);
  std::ostringstream style;
  style << std::setprecision(10) << "stroke=\"#1f4e9c\" stroke-width=\"" << 2 * stroke << "\"";
  polyline(pts, style.str());

  // Reference curves go on top, dotted, so coincidence stays visible.
  for (const auto& ref : references) {
    os << "  <!-- " << ref.label << " -->\n";
    std::ostringstream ref_style;
    ref_style << std::setprecision(10) << "stroke=\"#c33\" stroke-width=\"" << stroke
              << "\" stroke-dasharray=\"" << stroke << ' ' << 2 * stroke << "\"";
    polyline(ref.points, ref_style.str());
  }

  for (const Vec2& p : {wp.A, wp.B}) {
    os << "  <circle cx=\"" << p.x() << "\" cy=\"" << -p.y() << "\" r=\"" << 2 * stroke
       << "\" fill=\"#000\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

VerificationReport reverify(const CurveDump& d, const VerifyTolerances& tol) {
  VerificationReport r = verify_samples(d.samples, d.problem.problem, tol);
  r.moebius_residual_lambda = d.map.residual_lambda;
  r.moebius_residual_rho = d.map.residual_rho;
  r.moebius_ok = r.moebius_residual_lambda <= tol.moebius && r.moebius_residual_rho <= tol.moebius;
  return r;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::WrongWinding: return 2;
    case ErrorCode::BiarcDegenerate: return 3;
    case ErrorCode::PositiveQ: return 4;
    case ErrorCode::NonMonotone: return 5;
    case ErrorCode::NoConvergence: return 6;
    case ErrorCode::ConsistencyFailure: return 7;
    case ErrorCode::PoleOnCurve: return 8;
    case ErrorCode::DegenerateMap: return 9;
    case ErrorCode::CoincidentEndpoints: return 10;
    case ErrorCode::GrazingUnresolved: return 11;
    case ErrorCode::DomainError: return 12;
    case ErrorCode::NonFinite: return 13;
  }
  return kExitUsage;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace g2spiral::io
