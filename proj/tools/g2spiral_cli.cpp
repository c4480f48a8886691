// Command-line front end: solve, invariants, demo, verify.

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "g2spiral/io.hpp"
#include "g2spiral/oracles.hpp"

namespace fs = std::filesystem;
using namespace g2spiral;

namespace {

struct InlineProblem {
  std::string problem_path;
  double c = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  int n1 = 0;
  int n2 = 0;
  bool degrees = false;
  int samples = io::kDefaultSamples;
  bool samples_set = false;
};

void add_problem_options(CLI::App* cmd, InlineProblem& p) {
  cmd->add_option("-p,--problem", p.problem_path, "Problem JSON file");
  cmd->add_option("--c", p.c, "Chord half-length (inline problem, chord frame)");
  cmd->add_option("--alpha", p.alpha, "Start tangent relative to the chord");
  cmd->add_option("--beta", p.beta, "End tangent relative to the chord");
  cmd->add_option("--k1", p.k1, "Start curvature");
  cmd->add_option("--k2", p.k2, "End curvature");
  cmd->add_option("--n1", p.n1, "Crossings of the ray beyond A");
  cmd->add_option("--n2", p.n2, "Crossings of the ray beyond B");
  cmd->add_flag("--deg", p.degrees, "Inline angles are in degrees");
  cmd->add_option("--samples", p.samples, "Number of output samples")
      ->check(CLI::Range(2, 10000000))
      ->each([&p](const std::string&) { p.samples_set = true; });
}

io::ProblemFile load_problem(const InlineProblem& p) {
  io::ProblemFile pf;
  if (!p.problem_path.empty()) {
    pf = io::parse_problem(nlohmann::json::parse(io::read_file(p.problem_path)));
    if (p.samples_set) pf.samples = p.samples;
    return pf;
  }
  const double to_rad = p.degrees ? kPi / 180.0 : 1.0;
  pf.problem.A = Vec2(-p.c, 0.0);
  pf.problem.B = Vec2(p.c, 0.0);
  pf.problem.tangent1 = p.alpha * to_rad;
  pf.problem.tangent2 = p.beta * to_rad;
  pf.problem.k1 = p.k1;
  pf.problem.k2 = p.k2;
  pf.problem.n1 = p.n1;
  pf.problem.n2 = p.n2;
  pf.samples = p.samples;
  return pf;
}

SpiralCurve build_problem(const io::ProblemFile& pf) {
  const WorldProblem& w = pf.problem;
  return build(w.A, w.B, w.tangent1, w.tangent2, w.k1, w.k2, w.n1, w.n2, pf.solver);
}

void print_summary(const io::CurveDump& d) {
  std::cout << std::setprecision(12) << "Q = " << d.invariants.Q << "\nomega = " << d.invariants.omega
            << "\nM = " << d.invariants.M << "\ntheta = " << d.theta << "\nt = [" << d.t1 << ", "
            << d.t2 << "]\nz0 = " << d.map.z0.real() << (d.map.z0.imag() < 0 ? " - " : " + ")
            << std::abs(d.map.z0.imag()) << "i\nverified = " << (d.report.passed() ? "yes" : "no")
            << '\n';
}

struct Outputs {
  std::string svg;
  std::string csv;
  std::string json;
};

void write_outputs(const io::CurveDump& d, const Outputs& out,
                   std::span<const io::SvgReference> refs = {}) {
  if (!out.svg.empty()) io::write_file(out.svg, io::emit_svg(d, refs));
  if (!out.csv.empty()) io::write_file(out.csv, io::emit_csv(d));
  if (!out.json.empty()) io::write_file(out.json, io::emit_json(d));
}

int finish(const io::CurveDump& d) {
  if (!d.report.passed()) {
    std::cerr << "error: VerificationFailed\n";
    return io::kExitVerifyFailed;
  }
  return io::kExitOk;
}

int cmd_solve(const InlineProblem& p, const Outputs& out) {
  const io::ProblemFile pf = load_problem(p);
  const io::CurveDump d = io::make_dump(build_problem(pf), pf);
  print_summary(d);
  write_outputs(d, out);
  return finish(d);
}

int cmd_invariants(const InlineProblem& p) {
  const io::ProblemFile pf = load_problem(p);
  const ChordFrame frame = from_world(pf.problem);
  const MoebiusInvariants inv = compute_invariants(frame.bc);
  std::cout << std::setprecision(17) << "Q = " << inv.Q << "\nomega = " << inv.omega
            << "\nM = " << inv.M << '\n';
  return io::kExitOk;
}

io::ProblemFile problem_from_arc(const SampledArc& arc, int samples) {
  io::ProblemFile pf;
  const Similarity to_world = arc.frame.world_to_chord.inverse();
  const BoundaryConditions& bc = arc.frame.bc;
  pf.problem.A = to_world.apply(Vec2(-bc.c, 0.0));
  pf.problem.B = to_world.apply(Vec2(bc.c, 0.0));
  pf.problem.tangent1 = bc.alpha + to_world.rotation;
  pf.problem.tangent2 = bc.beta + to_world.rotation;
  pf.problem.k1 = bc.k1;
  pf.problem.k2 = bc.k2;
  pf.problem.n1 = bc.n1;
  pf.problem.n2 = bc.n2;
  pf.samples = samples;
  return pf;
}

io::ProblemFile concentric_problem(bool long_arc, int samples) {
  // Circle of radius 1 at A and radius 1/2 at B, both centred at the origin,
  // traversed counter-clockwise. The long variant adds one winding.
  io::ProblemFile pf;
  const double phi = 1.5 * kPi;
  pf.problem.A = Vec2(1.0, 0.0);
  pf.problem.B = 0.5 * Vec2(std::cos(phi), std::sin(phi));
  pf.problem.tangent1 = 0.5 * kPi;
  pf.problem.tangent2 = phi + 0.5 * kPi;
  pf.problem.k1 = 1.0;
  pf.problem.k2 = 2.0;
  pf.problem.n2 = long_arc ? 1 : 0;
  pf.samples = samples;
  return pf;
}

int cmd_demo(const std::string& which, const std::string& out_dir, int samples) {
  fs::create_directories(out_dir);
  std::vector<std::pair<std::string, io::ProblemFile>> problems;
  std::vector<io::SvgReference> refs;

  if (which == "tractrix") {
    constexpr double T = 1.0, s1 = 0.1, s2 = 3.0;
    problems.emplace_back("tractrix", problem_from_arc(tractrix_bc(T, s1, s2), samples));
    io::SvgReference ref{{}, "polar tractrix (oracle)"};
    for (int i = 0; i <= 2000; ++i) ref.points.push_back(tractrix_eval(T, s1 + (s2 - s1) * i / 2000).point);
    refs.push_back(std::move(ref));
  } else if (which == "cornu") {
    constexpr double a = 1.0, s1 = 0.3, s2 = 2.2;
    problems.emplace_back("cornu", problem_from_arc(cornu_bc(a, s1, s2), samples));
    io::SvgReference ref{{}, "Cornu spiral (oracle)"};
    for (int i = 0; i <= 400; ++i) ref.points.push_back(cornu_eval(a, s1 + (s2 - s1) * i / 400).point);
    refs.push_back(std::move(ref));
  } else if (which == "concentric") {
    problems.emplace_back("concentric_short", concentric_problem(false, samples));
    problems.emplace_back("concentric_long", concentric_problem(true, samples));
  } else {
    std::cerr << "error: unknown demo \"" << which << "\" (tractrix, cornu, concentric)\n";
    return io::kExitUsage;
  }

  int status = io::kExitOk;
  for (const auto& [name, pf] : problems) {
    const io::CurveDump d = io::make_dump(build_problem(pf), pf);
    std::cout << "== " << name << '\n';
    print_summary(d);
    const fs::path base = fs::path(out_dir) / name;
    write_outputs(d, {base.string() + ".svg", base.string() + ".csv", base.string() + ".json"}, refs);
    if (finish(d) != io::kExitOk) status = io::kExitVerifyFailed;
  }
  return status;
}

int cmd_verify(const std::string& path) {
  const io::CurveDump d = io::dump_from_json(nlohmann::json::parse(io::read_file(path)));
  const VerificationReport r = io::reverify(d);
  std::cout << io::dump_to_json(io::CurveDump{d.problem, d.invariants, d.theta, d.t0, d.t1, d.t2,
                                              d.reflected, d.map, {}, r})
                   .at("verification")
                   .dump(2)
            << '\n';
  if (!r.passed()) {
    std::cerr << "error: VerificationFailed\n";
    return io::kExitVerifyFailed;
  }
  return io::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G2 Hermite interpolation with spirals built from the involute of a circle"};
  app.require_subcommand(1);

  InlineProblem solve_in;
  Outputs outputs;
  auto* solve = app.add_subcommand("solve", "Build, verify and export a spiral");
  add_problem_options(solve, solve_in);
  solve->add_option("--svg", outputs.svg, "Write an SVG plot");
  solve->add_option("--csv", outputs.csv, "Write the curvature profile as CSV");
  solve->add_option("--json", outputs.json, "Write the curve dump as JSON");

  InlineProblem inv_in;
  auto* invariants = app.add_subcommand("invariants", "Print Q, omega and M");
  add_problem_options(invariants, inv_in);

  std::string demo_name;
  std::string demo_out = "demo_out";
  int demo_samples = io::kDefaultSamples;
  auto* demo = app.add_subcommand("demo", "Reproduce a reference construction");
  demo->add_option("name", demo_name, "tractrix | cornu | concentric")->required();
  demo->add_option("-o,--out", demo_out, "Output directory");
  demo->add_option("--samples", demo_samples, "Number of output samples")->check(CLI::Range(2, 10000000));

  std::string dump_path;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a curve dump");
  verify_cmd->add_option("dump", dump_path, "Curve dump JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(solve_in, outputs);
    if (*invariants) return cmd_invariants(inv_in);
    if (*demo) return cmd_demo(demo_name, demo_out, demo_samples);
    if (*verify_cmd) return cmd_verify(dump_path);
  } catch (const SpiralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io::kExitUsage;
  }
  return io::kExitUsage;
}
