// Command-line front end. Every command writes its results into the output
// directory (--out, else $LINFEIG_OUT_DIR, else the working directory) plus
// a run.json recording the full configuration.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linfeig/continuum_1d.hpp"
#include "linfeig/domain_profile.hpp"
#include "linfeig/error.hpp"
#include "linfeig/explicit_flow.hpp"
#include "linfeig/flow.hpp"
#include "linfeig/graph_distance.hpp"
#include "linfeig/graph_io.hpp"
#include "linfeig/spectral.hpp"
#include "linfeig/sphere.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace linfeig;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct Common {
  std::string out_dir;
  std::uint64_t seed = 0;
  json config = json::object();

  fs::path dir() const {
    std::string d = out_dir;
    if (d.empty()) {
      const char* env = std::getenv("LINFEIG_OUT_DIR");
      d = env ? env : ".";
    }
    fs::create_directories(d);
    return fs::path(d);
  }

  std::ofstream open(const std::string& name) const {
    std::ofstream out(dir() / name);
    if (!out) throw Error(Errc::MalformedInput, "cannot write " + (dir() / name).string());
    out << std::setprecision(17);
    return out;
  }

  void finish(const std::string& command, json results) const {
    json run = {{"command", command}, {"seed", seed}, {"config", config}, {"results", std::move(results)}};
    open("run.json") << run.dump(2) << '\n';
  }
};

// Graph from a JSON file or one of the built-in generators.
struct GraphSource {
  std::string file;
  std::size_t path = 0;
  std::vector<std::size_t> grid;
  std::string boundary = "ring";
  std::vector<std::size_t> random;
  std::string edge_list;
  std::vector<std::string> boundary_labels;

  void attach(CLI::App* app) {
    app->add_option("graph", file, "Graph JSON file");
    app->add_option("--path", path, "Path graph with N vertices");
    app->add_option("--grid", grid, "Grid graph W H")->expected(2);
    app->add_option("--boundary", boundary, "Grid boundary: ring or corners");
    app->add_option("--random", random, "Random connected graph N M (vertices, edges)")->expected(2);
    app->add_option("--edge-list", edge_list, "Whitespace edge list 'a b [w]'");
    app->add_option("--boundary-labels", boundary_labels, "Boundary labels for --edge-list");
  }

  WeightedGraph load(const Common& common) const {
    if (!file.empty()) return load_graph(file);
    if (path > 0) return path_graph(path);
    if (grid.size() == 2) {
      GridBoundary b;
      if (boundary == "ring") b = GridBoundary::Ring;
      else if (boundary == "corners") b = GridBoundary::Corners;
      else throw Error(Errc::MalformedInput, "boundary must be ring or corners");
      return grid_graph(grid[0], grid[1], b);
    }
    if (random.size() == 2) return random_connected_graph(random[0], random[1], common.seed);
    if (!edge_list.empty()) {
      std::ifstream in(edge_list);
      if (!in) throw Error(Errc::MalformedInput, "cannot open " + edge_list);
      return read_edge_list(in, boundary_labels).graph;
    }
    throw Error(Errc::MalformedInput, "no graph given (file, --path, --grid, --random or --edge-list)");
  }

  json describe() const {
    return {{"file", file}, {"path", path}, {"grid", grid}, {"boundary", boundary},
            {"random", random}, {"edge_list", edge_list}, {"boundary_labels", boundary_labels}};
  }
};

VertexFunction read_vertex_function(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedInput, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& ex) {
    throw Error(Errc::MalformedInput, path + ": " + ex.what());
  }
  if (!doc.is_array() || doc.size() != n) {
    throw Error(Errc::MalformedInput, path + ": expected a JSON array with one value per vertex");
  }
  std::vector<double> values;
  for (const auto& v : doc) {
    if (!v.is_number()) throw Error(Errc::MalformedInput, path + ": values must be numbers");
    values.push_back(v.get<double>());
  }
  return VertexFunction(std::move(values));
}

json to_json(const VertexFunction& u) { return std::vector<double>(u.values().begin(), u.values().end()); }

json outcome_json(const WeightedGraph& g, const CertificateOutcome& outcome) {
  if (outcome.feasible()) {
    json cert = certificate_to_json(g, *outcome.certificate);
    cert["feasible"] = true;
    return cert;
  }
  return {{"feasible", false}, {"lambda", outcome.lambda}, {"infeasibility", outcome.infeasibility},
          {"farkas", outcome.farkas}};
}

// ---------------------------------------------------------------- graph

struct GenerateCmd {
  GraphSource source;
  std::string file = "graph.json";
  void run(Common& c) {
    c.config = {{"graph", source.describe()}, {"file", file}};
    auto g = source.load(c);
    c.open(file) << graph_to_json(g).dump() << '\n';
    c.finish("generate", {{"vertices", g.num_vertices()}, {"edges", g.num_edges()}});
  }
};

struct DistanceCmd {
  GraphSource source;
  void run(Common& c) {
    c.config = {{"graph", source.describe()}};
    auto g = source.load(c);
    auto field = graph_distance(g);
    auto sat = gradient_saturation(g, field);
    auto out = c.open("distance.csv");
    out << "vertex,d\n";
    for (std::size_t x = 0; x < g.num_vertices(); ++x) out << x << ',' << field.d[x] << '\n';
    auto edges = c.open("saturation.csv");
    edges << "i,j,grad,saturated\n";
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const auto& ed = g.edge(e);
      edges << ed.i << ',' << ed.j << ',' << std::sqrt(ed.w) * (field.d[ed.j] - field.d[ed.i]) << ','
            << (sat.edges[e] == EdgeSaturation::Saturated ? 1 : 0) << '\n';
    }
    c.finish("graph-distance", {{"d_norm2", norm_p(field.d, 2.0)},
                                {"d_max", norm_p(field.d, std::numeric_limits<double>::infinity())},
                                {"inconsistent_edges", sat.inconsistent}});
    std::cout << "vertices " << g.num_vertices() << ", max distance "
              << norm_p(field.d, std::numeric_limits<double>::infinity()) << '\n';
  }
};

struct FlowCmd {
  GraphSource source;
  std::string f = "const";
  double value = 1.0;
  double step = 0.0;
  double tol = 1e-9;
  double cert_tol = 1e-6;
  std::vector<double> snapshots;
  void run(Common& c) {
    c.config = {{"graph", source.describe()}, {"f", f}, {"value", value}, {"step", step},
                {"tol", tol}, {"cert_tol", cert_tol}, {"snapshots", snapshots}};
    auto g = source.load(c);
    VertexFunction init = f == "const" ? VertexFunction(g.num_vertices(), value)
                                       : read_vertex_function(f, g.num_vertices());
    FlowOptions options;
    options.step = step;
    options.tol = tol;
    auto traj = gradient_flow(g, init, options);
    auto out = c.open("trajectory.csv");
    write_trajectory_csv(out, traj);
    if (!snapshots.empty()) {
      auto snap = c.open("snapshots.csv");
      write_snapshots_csv(snap, traj, snapshots);
    }

    json results = {{"steps", traj.times.size() - 1},
                    {"extinction_time", traj.extinction_time_estimate}};
    if (traj.states.size() >= 2) {
      auto est = asymptotic_profile(traj, g);
      auto outcome = eigen_certificate(g, est.profile, cert_tol);
      json profile = {{"profile", to_json(est.profile)},
                      {"lambda_est", est.lambda_est},
                      {"lambda_unit_lipschitz", est.lambda_unit_lipschitz},
                      {"extinction_time", traj.extinction_time_estimate},
                      {"certificate", outcome_json(g, outcome)}};
      c.open("profile.json") << profile.dump(2) << '\n';
      results["lambda_est"] = est.lambda_est;
      results["certified"] = outcome.feasible() && outcome.certificate->valid(cert_tol);
    }
    c.finish("flow", results);
    std::cout << "extinction time " << traj.extinction_time_estimate << " after "
              << traj.times.size() - 1 << " steps\n";
  }
};

struct CertifyCmd {
  GraphSource source;
  std::string u;
  double tol = 1e-9;
  void run(Common& c) {
    c.config = {{"graph", source.describe()}, {"u", u}, {"tol", tol}};
    auto g = source.load(c);
    auto fn = read_vertex_function(u, g.num_vertices());
    auto outcome = eigen_certificate(g, fn, tol);
    json doc = outcome_json(g, outcome);
    c.open("certificate.json") << doc.dump(2) << '\n';
    c.finish("certify", doc);
    std::cout << (outcome.feasible() ? "eigenfunction" : "not an eigenfunction") << ", lambda "
              << outcome.lambda << '\n';
  }
};

struct ExtremeCmd {
  GraphSource source;
  std::string u;
  double tol = 1e-9;
  void run(Common& c) {
    c.config = {{"graph", source.describe()}, {"u", u}, {"tol", tol}};
    auto g = source.load(c);
    auto fn = read_vertex_function(u, g.num_vertices());
    auto result = extreme_point_check(g, fn, tol);
    c.finish("extreme", {{"extreme", result.extreme}, {"failing", result.failing}});
    std::cout << (result.extreme ? "extreme" : "not extreme") << '\n';
  }
};

// ---------------------------------------------------------------- continuum

struct ContinuumCmd {
  std::string profile = "interval";
  std::string demo = "g";
  double a = -1.0, b = 1.0, radius = 1.0, side = 1.0, delta = 0.4;
  std::string csv;
  int dim = 2;
  double tol = 1e-12;
  int samples = 101;
  double r_tilde = 0.0, tau_tilde = 0.0;
  int n_max = 5;

  void attach(CLI::App* app) {
    app->add_option("--profile", profile, "interval|disk|square|lshape|csv")
        ->check(CLI::IsMember({"interval", "disk", "square", "lshape", "csv"}));
    app->add_option("--demo", demo, "g|flow|vartime|levelsets|calibration|bound")
        ->check(CLI::IsMember({"g", "flow", "vartime", "levelsets", "calibration", "bound"}));
    app->add_option("--a", a, "Interval left end");
    app->add_option("--b", b, "Interval right end");
    app->add_option("--R", radius, "Disk radius");
    app->add_option("--L", side, "Square side / L-shape size");
    app->add_option("--delta", delta, "L-shape thickness");
    app->add_option("--csv", csv, "Tabulated profile CSV (tau,perimeter)");
    app->add_option("--dim", dim, "Dimension of a tabulated profile");
    app->add_option("--tol", tol, "ODE tolerance");
    app->add_option("--samples", samples, "Number of sample points");
    app->add_option("--r-tilde", r_tilde, "Perimeter bound r~ (default: profile's)");
    app->add_option("--tau-tilde", tau_tilde, "Perimeter bound tau~ (default: profile's)");
    app->add_option("--n-max", n_max, "Largest dimension for --demo calibration");
  }

  DomainProfile make() const {
    if (profile == "interval") return DomainProfile::interval(a, b);
    if (profile == "disk") return DomainProfile::disk(radius);
    if (profile == "square") return DomainProfile::square(side);
    if (profile == "lshape") return DomainProfile::lshape(side, delta);
    std::ifstream in(csv);
    if (!in) throw Error(Errc::MalformedInput, "cannot open profile CSV '" + csv + "'");
    return DomainProfile::from_csv(in, dim);
  }

  // Closed-form g(t) for the interval, residual of the implicit relation
  // for the disk; NaN otherwise.
  double reference(const DomainProfile& p, double t, double g) const {
    const double r = p.in_radius();
    if (p.name() == "interval") return std::sqrt(3.0 * t / (r * r * r));
    if (p.name() == "disk") {
      return 2 * g * g - g * g * g - 6.0 * t / (M_PI * r * r * r * r);
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  void run(Common& c) {
    c.config = {{"profile", profile}, {"demo", demo}, {"a", a}, {"b", b}, {"R", radius},
                {"L", side}, {"delta", delta}, {"csv", csv}, {"dim", dim}, {"tol", tol},
                {"samples", samples}, {"r_tilde", r_tilde}, {"tau_tilde", tau_tilde},
                {"n_max", n_max}};
    if (samples < 2) throw Error(Errc::OutOfRange, "--samples must be >= 2");
    if (demo == "calibration") return calibration(c);
    auto p = make();
    json results = {{"profile", p.name()}, {"in_radius", p.in_radius()}, {"d_norm2_sq", p.d_norm2_sq()}};
    if (demo == "bound") return bound(c, p, results);

    auto traj = solve_g(p, tol);
    results["t_star"] = traj.t_star();
    results["c3"] = traj.c3();
    results["extinction_time"] = extinction_time(p, traj);
    const double ts = traj.t_star();
    if (demo == "g") {
      auto out = c.open("g.csv");
      out << "t,g,reference,error\n";
      for (int i = 0; i < samples; ++i) {
        double t = ts * i / (samples - 1);
        double g = traj.g(t);
        double ref = reference(p, t, g);
        double err = p.name() == "interval" ? g - ref : ref;
        out << t << ',' << g << ',' << ref << ',' << err << '\n';
      }
    } else if (demo == "flow") {
      const double r = p.in_radius(), end = extinction_time(p, traj);
      auto out = c.open("flow.csv");
      out << "t,d,u\n";
      for (int i = 0; i < samples; ++i) {
        double t = end * i / (samples - 1);
        for (int j = 0; j < samples; ++j) {
          double d = r * j / (samples - 1);
          out << t << ',' << d << ',' << explicit_flow_value(p, traj, t, d) << '\n';
        }
      }
    } else if (demo == "vartime") {
      auto out = c.open("vartime.csv");
      out << "t,g,variational_time,error\n";
      double worst = 0.0;
      for (int i = 1; i < samples; ++i) {
        double t = ts * i / (samples - 1);
        double g = traj.g(t);
        double vt = variational_time(p, std::min(g, 1.0));
        worst = std::max(worst, std::abs(vt - t));
        out << t << ',' << g << ',' << vt << ',' << vt - t << '\n';
      }
      results["max_error"] = worst;
    } else if (demo == "levelsets") {
      const double r = p.in_radius();
      auto out = c.open("levelsets.csv");
      out << "t,c,radius,plateau\n";
      for (int i = 0; i < samples; ++i) {
        double t = ts * i / (samples - 1);
        for (int j = 0; j <= 10; ++j) {
          double level = j == 10 ? r : r * j / 10.0;
          auto ls = level_set_radius(traj, level, t, r);
          out << t << ',' << level << ',' << ls.value << ',' << (ls.plateau ? 1 : 0) << '\n';
        }
      }
    }
    c.finish("continuum", results);
    std::cout << p.name() << ": t* = " << traj.t_star() << ", extinction time "
              << extinction_time(p, traj) << '\n';
  }

  void bound(Common& c, const DomainProfile& p, json results) const {
    double rt = r_tilde, tt = tau_tilde;
    if (rt <= 0.0 || tt <= 0.0) {
      if (!p.bound_params()) throw Error(Errc::MissingBoundParams, "pass --r-tilde and --tau-tilde");
      if (rt <= 0.0) rt = p.bound_params()->r_tilde;
      if (tt <= 0.0) tt = p.bound_params()->tau_tilde;
    }
    auto report = perimeter_bound_check(p, rt, tt, samples);
    auto out = c.open("bound.csv");
    out << "tau,perimeter,bound,margin\n";
    const double p0 = p.perimeter(0.0);
    for (int i = 0; i < samples; ++i) {
      double tau = tt * i / (samples - 1);
      double lower = p0 * std::pow(1.0 - tau / rt, p.dimension() - 1);
      out << tau << ',' << p.perimeter(tau) << ',' << lower << ',' << p.perimeter(tau) - lower << '\n';
    }
    results["r_tilde"] = rt;
    results["tau_tilde"] = tt;
    results["holds"] = report.holds;
    results["worst_margin"] = report.worst_margin;
    c.finish("continuum", results);
    std::cout << (report.holds ? "PASS" : "FAIL") << " worst margin " << report.worst_margin << '\n';
  }

  void calibration(Common& c) const {
    if (n_max < 1) throw Error(Errc::OutOfRange, "--n-max must be >= 1");
    auto out = c.open("calibration.csv");
    out << "n,lambda,d_norm2_sq,residual,norm_gap,argmax,expected_argmax\n";
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) {
      auto cal = sphere_calibration(n);
      double expected = (n + 1.0) / (2.0 * n);
      out << n << ',' << cal.lambda << ',' << cal.d_norm2_sq << ',' << cal.residual << ','
          << cal.norm_gap << ',' << cal.argmax << ',' << expected << '\n';
      rows.push_back({{"n", n}, {"residual", cal.residual}, {"norm_gap", cal.norm_gap}});
    }
    c.finish("continuum", {{"calibration", rows}});
  }
};

// ---------------------------------------------------------------- 1D

PiecewiseLinearFn read_pwl_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedInput, "cannot open " + path);
  return read_pwl_csv(in);
}

struct BasisCmd {
  int n = 4;
  void run(Common& c) {
    c.config = {{"n", n}};
    if (n < 1) throw Error(Errc::InvalidIndex, "--n must be >= 1");
    auto table = c.open("rayleigh.csv");
    table << "name,n,rayleigh_sq,rayleigh,nonnegative,eigen_feasible,lambda\n";
    json rows = json::array();
    // v_1, u_1, v_2, u_2, ... has quotients sqrt(3/2) * 1, 2, 3, 4, ...
    for (int k = 1; k <= n; ++k) {
      for (auto kind : {BasisKind::Even, BasisKind::Odd}) {
        auto f = basis_function(kind, k);
        std::string name = std::string(kind == BasisKind::Odd ? "u" : "v") + std::to_string(k);
        auto file = c.open("basis_" + name + ".csv");
        write_pwl_csv(file, f);
        bool nonneg = std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return v >= 0; });
        auto eig = eigen_check_1d(f);
        table << name << ',' << k << ',' << format_rational(rayleigh_quotient_sq(f)) << ','
              << rayleigh_quotient(f) << ',' << nonneg << ',' << eig.feasible << ','
              << format_rational(eig.lambda) << '\n';
        rows.push_back({{"name", name}, {"rayleigh", rayleigh_quotient(f)}, {"eigen", eig.feasible}});
      }
    }
    c.finish("basis", {{"functions", rows}});
  }
};

struct Extreme1dCmd {
  std::string file;
  std::string tol = "0";
  void run(Common& c) {
    c.config = {{"file", file}, {"tol", tol}};
    auto f = read_pwl_file(file);
    auto result = extreme_check_1d(f, parse_rational(tol));
    json results = {{"extreme", result.extreme}, {"slack_measure", format_rational(result.slack_measure)}};
    if (result.decomposition) {
      const auto& dec = *result.decomposition;
      auto plus = c.open("v_plus.csv");
      write_pwl_csv(plus, dec.v_plus);
      auto minus = c.open("v_minus.csv");
      write_pwl_csv(minus, dec.v_minus);
      results["epsilon"] = format_rational(dec.epsilon);
      results["alpha"] = format_rational(dec.alpha);
      results["verified"] = dec.verified();
    }
    c.finish("extreme-1d", results);
    std::cout << (result.extreme ? "extreme" : "not_extreme") << '\n';
  }
};

struct Eigen1dCmd {
  std::string file;
  void run(Common& c) {
    c.config = {{"file", file}};
    auto f = read_pwl_file(file);
    auto result = eigen_check_1d(f);
    json results = {{"feasible", result.feasible}, {"lambda", format_rational(result.lambda)}};
    if (result.feasible) {
      results["c"] = format_rational(result.c);
      results["c_low"] = format_rational(result.c_low);
      results["c_high"] = format_rational(result.c_high);
      results["q_norm1"] = format_rational(result.q_norm1);
    } else {
      results["reason"] = result.reason;
    }
    c.finish("eigen-1d", results);
    std::cout << (result.feasible ? "eigenfunction" : "not an eigenfunction: " + result.reason) << '\n';
  }
};

struct SvcCmd {
  int level = 6;
  void run(Common& c) {
    c.config = {{"level", level}};
    auto set = svc_set(level);
    auto intervals = c.open("svc_intervals.csv");
    intervals << "left,right\n";
    for (const auto& [l, r] : set.intervals) intervals << format_rational(l) << ',' << format_rational(r) << '\n';
    auto dist = c.open("svc_distance.csv");
    write_pwl_csv(dist, distance_to_set(set));
    c.finish("svc", {{"measure", format_rational(set.measure())}, {"intervals", set.intervals.size()}});
  }
};

int report(const Error& err) {
  json diag = {{"error", std::string(to_string(err.code()))}, {"message", err.what()}};
  std::cerr << diag.dump() << '\n';
  return is_numerical(err.code()) ? kExitNumerical : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance functions as nonlinear eigenfunctions: graph and continuum solvers"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--out", common.out_dir, "Output directory (default $LINFEIG_OUT_DIR or .)");
  app.add_option("--seed", common.seed, "Seed for randomized generators");

  GenerateCmd generate;
  auto* gen = app.add_subcommand("generate", "Write a generated graph as JSON");
  generate.source.attach(gen);
  gen->add_option("--file", generate.file, "Output file name inside the output directory");

  DistanceCmd distance;
  auto* dist = app.add_subcommand("graph-distance", "Distance to the boundary and saturated edges");
  distance.source.attach(dist);

  FlowCmd flow;
  auto* fl = app.add_subcommand("flow", "Implicit-Euler gradient flow of J_w and its asymptotic profile");
  flow.source.attach(fl);
  fl->add_option("--f", flow.f, "'const' or a JSON array file with the initial datum");
  fl->add_option("--value", flow.value, "Constant for --f const");
  fl->add_option("--step", flow.step, "Time step (default 0.01 ||f||^2 / J_w(f))");
  fl->add_option("--tol", flow.tol, "Extinction threshold on ||u||_2");
  fl->add_option("--cert-tol", flow.cert_tol, "Tolerance for certifying the profile");
  fl->add_option("--snapshots", flow.snapshots, "Times for per-vertex snapshots");

  CertifyCmd certify;
  auto* cert = app.add_subcommand("certify", "Eigenfunction certificate for a vertex function");
  certify.source.attach(cert);
  cert->add_option("--u", certify.u, "JSON array file with u")->required();
  cert->add_option("--tol", certify.tol, "Feasibility tolerance");

  ExtremeCmd extreme;
  auto* ext = app.add_subcommand("extreme", "Extreme-point test in {J_w <= 1}");
  extreme.source.attach(ext);
  ext->add_option("--u", extreme.u, "JSON array file with u")->required();
  ext->add_option("--tol", extreme.tol, "Saturation tolerance");

  ContinuumCmd continuum;
  auto* cont = app.add_subcommand("continuum", "Inner-parallel-body computations on model domains");
  continuum.attach(cont);

  BasisCmd basis;
  auto* bas = app.add_subcommand("basis", "First K odd and even 1D eigenfunctions");
  bas->add_option("--n", basis.n, "Number K of functions per family");

  Extreme1dCmd extreme1d;
  auto* e1 = app.add_subcommand("extreme-1d", "Extreme-point test for a 1D piecewise-linear function");
  e1->add_option("file", extreme1d.file, "CSV breakpoint,value")->required();
  e1->add_option("--tol", extreme1d.tol, "Slope tolerance (exact rational)");

  Eigen1dCmd eigen1d;
  auto* eg = app.add_subcommand("eigen-1d", "Eigenfunction test for a 1D piecewise-linear function");
  eg->add_option("file", eigen1d.file, "CSV breakpoint,value")->required();

  SvcCmd svc;
  auto* sv = app.add_subcommand("svc", "Smith-Volterra-Cantor set and its distance function");
  sv->add_option("--level", svc.level, "Construction level N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen) generate.run(common);
    else if (*dist) distance.run(common);
    else if (*fl) flow.run(common);
    else if (*cert) certify.run(common);
    else if (*ext) extreme.run(common);
    else if (*cont) continuum.run(common);
    else if (*bas) basis.run(common);
    else if (*e1) extreme1d.run(common);
    else if (*eg) eigen1d.run(common);
    else if (*sv) svc.run(common);
  } catch (const Error& err) {
    return report(err);
  } catch (const fs::filesystem_error& err) {
    std::cerr << json{{"error", "MalformedInput"}, {"message", err.what()}}.dump() << '\n';
    return kExitInput;
  }
  return 0;
}
