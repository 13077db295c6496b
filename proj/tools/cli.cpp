#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>

#include "polyharm/polyharm.hpp"

namespace polyharm::cli {

namespace {

constexpr const char* kSeedEnv = "POLYHARM_SEED";

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

struct GridFlags {
  double r_min = 0.05;
  double r_max = 0.99;
  std::size_t radii = 64;
  std::size_t angles = 512;

  void attach(CLI::App* sub) {
    sub->add_option("--r-min", r_min, "Innermost grid radius")->capture_default_str();
    sub->add_option("--r-max", r_max, "Outermost grid radius (< 1)")->capture_default_str();
    sub->add_option("--radii", radii, "Number of grid radii (>= 8)")->capture_default_str();
    sub->add_option("--angles", angles, "Number of grid angles (>= 64)")->capture_default_str();
  }

  PolarGrid make() const { return PolarGrid::make(r_min, r_max, radii, angles); }
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw InvalidArgument(std::string(kSeedEnv) + " is not an unsigned integer");
  }
  return 0;
}

int run_check(const std::string& path, const std::string& cls, std::istream& in, std::ostream& out) {
  const auto doc = parse_mapping_document(read_source(path, in));
  const ClassKind kind = cls == "hc" ? ClassKind::convex : ClassKind::starlike;
  const auto m = membership(doc.map, kind);
  if (doc.name) out << "name: " << *doc.name << "\n";
  out << "class: " << (kind == ClassKind::convex ? "HC_p" : "HS_p") << " (p = " << doc.map.degree()
      << ", J = " << doc.map.order() << ")\n"
      << "member: " << (m.member ? "yes" : "no") << "\n"
      << "lhs: " << fmt17(m.lhs) << "\n"
      << "rhs: " << fmt17(m.rhs) << "\n"
      << "slack: " << fmt17(m.slack) << "\n"
      << "first_order_budget: " << fmt17(m.first_order_budget) << "\n";
  if (!m.member) return kFailure;
  const auto bounds = coefficient_bound_report(doc.map, kind);
  for (const auto& d : bounds.per_degree) {
    if (d.sum == 0.0) continue;
    out << "j=" << d.j << " sum=" << fmt17(d.sum) << " bound=" << fmt17(d.bound)
        << (d.satisfied ? " ok" : " VIOLATED") << (d.tight ? " tight" : "") << "\n";
  }
  return bounds.all_satisfied() ? kSuccess : kFailure;
}

int run_certify(const std::string& path, const std::string& property, const GridFlags& gf,
                double tolerance, std::istream& in, std::ostream& out) {
  const auto map = parse_spec(read_source(path, in));
  const auto grid = gf.make();
  CertificateReport rep;
  if (property == "starlike")
    rep = starlike_certificate(map, grid, tolerance);
  else if (property == "convex")
    rep = convex_certificate(map, grid, tolerance);
  else
    rep = sense_preserving_check(map, grid, tolerance);
  out << to_record(rep) << "\n";
  if (rep.origin_bound) out << "origin_bound " << fmt17(*rep.origin_bound) << "\n";
  if (std::isfinite(rep.auxiliary_min)) out << "min_denominator " << fmt17(rep.auxiliary_min) << "\n";
  return rep.pass ? kSuccess : kFailure;
}

int run_fekete(const SweepOptions& opts, const std::string& output, std::ostream& out,
               std::ostream& err) {
  const auto rows = fs_sweep(opts);
  std::ostringstream csv;
  csv << "lambda,max_a,bound_a,max_b,bound_b\n";
  bool ok = true;
  for (const auto& r : rows) {
    csv << fmt17(r.lambda) << ',' << fmt17(r.max_a) << ',' << fmt17(r.bound_a) << ','
        << fmt17(r.max_b) << ',' << fmt17(r.bound_b) << '\n';
    if (!r.within_bounds()) {
      ok = false;
      err << "bound violated at lambda = " << fmt17(r.lambda) << "\n";
    }
  }
  if (output.empty() || output == "-") {
    out << csv.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw Error("cannot write '" + output + "'");
    file << csv.str();
  }
  return ok ? kSuccess : kFailure;
}

int run_witness(const std::string& kind, std::size_t j0, double phi, std::size_t order,
                std::ostream& out) {
  std::optional<PolyharmonicMap> map;
  if (kind == "a") {
    map = extremal_witness(WitnessKind::a_functional, order).as_polyharmonic();
  } else if (kind == "b+") {
    map = extremal_witness(WitnessKind::b_functional_positive, order).as_polyharmonic();
  } else if (kind == "b-") {
    map = extremal_witness(WitnessKind::b_functional_negative, order).as_polyharmonic();
  } else if (kind == "extremal-h") {
    auto f = extremal_witness(WitnessKind::a_functional, order);
    map = PolyharmonicMap({HarmonicLayer{f.h, PowerSeries(order)}});
  } else if (kind == "f1") {
    map = catalog::f1(order);
  } else if (kind == "f2") {
    map = catalog::f2(j0, phi, order);
  } else if (kind == "f3") {
    map = catalog::f3(j0, phi, order);
  } else {
    map = catalog::f4(order);
  }
  out << serialize_mapping(*map, kind);
  return kSuccess;
}

int run_theorem7(const std::string& path, std::size_t steps, const GridFlags& gf, std::istream& in,
                 std::ostream& out) {
  const auto map = parse_spec(read_source(path, in));
  const auto res = theorem7_search(map, steps, gf.make());
  out << "alpha " << fmt17(res.alpha) << "\nbeta " << fmt17(res.beta) << "\nmin " << fmt17(res.min_value)
      << "\n" << (res.pass ? "pass" : "fail") << "\n";
  return res.pass ? kSuccess : kFailure;
}

int run_render(const std::string& path, const std::string& output, const RenderConfig& cfg,
               std::istream& in, std::ostream& out) {
  const auto map = parse_spec(read_source(path, in));
  const auto svg = render_disk_image(map, cfg);
  if (output == "-") {
    out << svg;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw Error("cannot write '" + output + "'");
    file << svg;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Construct, classify and certify polyharmonic mappings of the unit disk", "polyharm"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string cls = "hs";
  auto* check = app.add_subcommand("check", "Coefficient-class membership and per-degree bounds");
  check->add_option("spec", spec_path, "Mapping document ('-' for stdin)")->required();
  check->add_option("--class", cls, "hs (starlike class) or hc (convex class)")
      ->check(CLI::IsMember({"hs", "hc"}))
      ->capture_default_str();

  std::string property;
  GridFlags grid_flags;
  double tolerance = 0.0;
  auto* certify = app.add_subcommand("certify", "Sampled starlike / convex / sense-preserving certificate");
  certify->add_option("spec", spec_path, "Mapping document ('-' for stdin)")->required();
  certify->add_option("--property", property, "starlike, convex or sense")
      ->required()
      ->check(CLI::IsMember({"starlike", "convex", "sense"}));
  certify->add_option("--tolerance", tolerance, "Pass threshold on the minimum")->capture_default_str();
  grid_flags.attach(certify);

  SweepOptions sweep;
  double lambda_min = -2.0, lambda_max = 2.0, lambda_step = 0.1;
  std::optional<std::uint64_t> seed;
  bool no_witnesses = false;
  std::string output;
  auto* fekete = app.add_subcommand("fekete", "Monte-Carlo sweep of both Fekete-Szego functionals (CSV)");
  fekete->add_option("--samples", sweep.samples, "Random class-F maps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fekete->add_option("--lambda-min", lambda_min)->capture_default_str();
  fekete->add_option("--lambda-max", lambda_max)->capture_default_str();
  fekete->add_option("--lambda-step", lambda_step)->check(CLI::PositiveNumber)->capture_default_str();
  fekete->add_option("--seed", seed, "Base seed (default: $POLYHARM_SEED or 0)");
  fekete->add_option("--max-atoms", sweep.max_atoms, "Atoms per random measure")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fekete->add_flag("--no-witnesses", no_witnesses, "Leave the extremal witnesses out of the pool");
  fekete->add_option("-o,--output", output, "CSV destination (default stdout)");

  std::string kind;
  std::size_t j0 = 3;
  double phi = std::numbers::pi / 6.0;
  std::size_t truncation = kDefaultTruncation;
  auto* witness = app.add_subcommand("witness", "Emit a named mapping as a mapping document");
  witness->add_option("--kind", kind, "a, b+, b-, extremal-h, f1, f2, f3 or f4")
      ->required()
      ->check(CLI::IsMember({"a", "b+", "b-", "extremal-h", "f1", "f2", "f3", "f4"}));
  witness->add_option("--j", j0, "Extra degree for f2/f3")->check(CLI::Range(2, 1 << 20))->capture_default_str();
  witness->add_option("--phi", phi, "Rotation for f2/f3")->capture_default_str();
  witness->add_option("--truncation", truncation, "Truncation order J")
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();

  std::size_t angle_steps = 180;
  auto* theorem7 = app.add_subcommand("theorem7", "Search angles (alpha, beta) for the convexity-type condition");
  theorem7->add_option("spec", spec_path, "Mapping document ('-' for stdin)")->required();
  theorem7->add_option("--angle-steps", angle_steps, "Lattice size per angle")
      ->check(CLI::Range(4, 100000))
      ->capture_default_str();
  grid_flags.attach(theorem7);

  RenderConfig render_cfg;
  std::string svg_path;
  auto* render = app.add_subcommand("render", "Write an SVG image of the disk under the mapping");
  render->add_option("spec", spec_path, "Mapping document ('-' for stdin)")->required();
  render->add_option("-o,--output", svg_path, "SVG destination ('-' for stdout)")->required();
  render->add_option("--circles", render_cfg.circles)->check(CLI::Range(2, 10000))->capture_default_str();
  render->add_option("--rays", render_cfg.rays)->check(CLI::Range(2, 10000))->capture_default_str();
  render->add_option("--samples", render_cfg.samples_per_curve)->check(CLI::Range(2, 1000000))->capture_default_str();
  render->add_option("--r-max", render_cfg.r_max)->capture_default_str();
  render->add_option("--canvas", render_cfg.canvas)->check(CLI::Range(2, 100000))->capture_default_str();
  render->add_option("--stroke", render_cfg.stroke)->capture_default_str();
  render->add_option("--boundary-stroke", render_cfg.boundary_stroke)->capture_default_str();
  render->add_option("--stroke-width", render_cfg.stroke_width)->capture_default_str();
  render->add_option("--boundary-stroke-width", render_cfg.boundary_stroke_width)->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (check->parsed()) return run_check(spec_path, cls, in, out);
    if (certify->parsed()) return run_certify(spec_path, property, grid_flags, tolerance, in, out);
    if (fekete->parsed()) {
      sweep.seed = seed ? *seed : default_seed();
      sweep.include_witnesses = !no_witnesses;
      sweep.lambdas = lambda_range(lambda_min, lambda_max, lambda_step);
      return run_fekete(sweep, output, out, err);
    }
    if (witness->parsed()) return run_witness(kind, j0, phi, truncation, out);
    if (theorem7->parsed()) return run_theorem7(spec_path, angle_steps, grid_flags, in, out);
    if (render->parsed()) return run_render(spec_path, svg_path, render_cfg, in, out);
  } catch (const DenominatorCollapse& e) {
    err << "error: " << e.what() << " (r = " << fmt17(e.r()) << ", theta = " << fmt17(e.theta()) << ")\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  err << app.help();
  return kUsage;
}

}  // namespace polyharm::cli
