// biharm: solve Schwartz-type (1-3) boundary value problems in the
// biharmonic algebra on the half-plane and the unit disk, emit field grids,
// and run verification reports.
//
// Exit codes: 0 ok, 1 usage/IO/verify failure, 2 unsolvable problem.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "biharm/biharm.hpp"

namespace {

using namespace biharm;
using nlohmann::json;

struct JobConfig {
  std::string domain = "disk";  // halfplane | disk | main-biharmonic
  std::string u1_path;
  std::string u3_path;
  double a = 0.0, a1 = 0.0, a2 = 0.0;
  std::string grid = "16x16";  // N rows x M columns
  double rmax = 0.9;
  double extent = 5.0;
  double ymin = 1e-3;
  std::string out_path;
  std::string format = "csv";
  int nodes_line = kDefaultLineNodes;
  int nodes_circle = kDefaultCircleNodes;
  bool corrupt_swap = false;

  int rows = 16, cols = 16;
};

bool parse_grid(JobConfig& c) {
  const auto x = c.grid.find('x');
  if (x == std::string::npos) return false;
  try {
    c.rows = std::stoi(c.grid.substr(0, x));
    c.cols = std::stoi(c.grid.substr(x + 1));
  } catch (...) {
    return false;
  }
  return c.rows >= 2 && c.cols >= 2;
}

struct BoundaryInput {
  CircleData circle1, circle3;  // disk / main-biharmonic
  LineData line1, line3;        // halfplane
  std::string hash1 = "0", hash3 = "0";
  double sup_norm = 0.0;   // l1 coefficient bound over both data
  double slope_sup = 0.0;  // sum n(|a_n|+|b_n|), bounds the angular derivative
};

double slope_bound(const CircleData& u) {
  double s = 0.0;
  for (int n = 1; n <= u.degree(); ++n)
    s += n * (std::abs(u.cos_coefficient(n)) + std::abs(u.sin_coefficient(n)));
  return s;
}

BoundaryInput load_inputs(const JobConfig& c) {
  BoundaryInput in;
  const bool halfplane = c.domain == "halfplane";
  auto load = [&](const std::string& path, CircleData& cd, LineData& ld, std::string& hash) {
    if (path.empty()) return;
    const std::string bytes = read_file(path);
    hash = fnv1a_hex(bytes);
    const json j = json::parse(bytes);
    if (halfplane) {
      ld = parse_line_json(j);
    } else {
      cd = parse_circle_json(j);
    }
  };
  load(c.u1_path, in.circle1, in.line1, in.hash1);
  load(c.u3_path, in.circle3, in.line3, in.hash3);
  const CircleData& p1 = halfplane ? in.line1.pullback : in.circle1;
  const CircleData& p3 = halfplane ? in.line3.pullback : in.circle3;
  in.sup_norm = p1.coefficient_norm() + p3.coefficient_norm();
  in.slope_sup = slope_bound(p1) + slope_bound(p3);
  return in;
}

FieldEval maybe_corrupt(FieldEval f, bool corrupt) {
  if (!corrupt) return f;
  return [f = std::move(f)](BPoint p) {
    const BNumber v = f(p);
    return BNumber{v.z2, v.z1};  // component swap: breaks monogenicity
  };
}

// ---------------------------------------------------------------- output --

void write_records_csv(std::ostream& os, const JobConfig& c, const BoundaryInput& in,
                       std::optional<double> solvability, bool scalar_field,
                       const std::vector<std::vector<double>>& records) {
  os << "# biharm solve output\n";
  os << "# domain: " << c.domain << "\n";
  os << "# u1: " << (c.u1_path.empty() ? "(zero)" : c.u1_path) << " hash=" << in.hash1 << "\n";
  os << "# u3: " << (c.u3_path.empty() ? "(zero)" : c.u3_path) << " hash=" << in.hash3 << "\n";
  os << "# a: " << format_double(c.a) << " a1: " << format_double(c.a1)
     << " a2: " << format_double(c.a2) << "\n";
  os << "# grid: " << c.rows << "x" << c.cols << "\n";
  os << "# nodes: line=" << c.nodes_line << " circle=" << c.nodes_circle << "\n";
  if (solvability) os << "# solvability_integral: " << format_double(*solvability) << "\n";
  os << (scalar_field ? "x,y,V" : "x,y,U1,U2,U3,U4") << "\n";
  for (const auto& r : records) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << ",";
      os << format_double(r[i]);
    }
    os << "\n";
  }
}

void write_records_json(std::ostream& os, const JobConfig& c, const BoundaryInput& in,
                        std::optional<double> solvability, bool scalar_field,
                        const std::vector<std::vector<double>>& records) {
  json meta{{"domain", c.domain},
            {"u1", c.u1_path.empty() ? "(zero)" : c.u1_path},
            {"u1_hash", in.hash1},
            {"u3", c.u3_path.empty() ? "(zero)" : c.u3_path},
            {"u3_hash", in.hash3},
            {"a", c.a},
            {"a1", c.a1},
            {"a2", c.a2},
            {"grid", c.grid},
            {"nodes_line", c.nodes_line},
            {"nodes_circle", c.nodes_circle},
            {"columns", scalar_field ? json::array({"x", "y", "V"})
                                     : json::array({"x", "y", "U1", "U2", "U3", "U4"})}};
  if (solvability) meta["solvability_integral"] = *solvability;
  json out{{"metadata", meta}, {"records", records}};
  os << out.dump(2) << "\n";
}

int write_output(const JobConfig& c, const BoundaryInput& in, std::optional<double> solvability,
                 bool scalar_field, const std::vector<std::vector<double>>& records) {
  std::ofstream os(c.out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file: " << c.out_path << "\n";
    return 1;
  }
  if (c.format == "json")
    write_records_json(os, c, in, solvability, scalar_field, records);
  else
    write_records_csv(os, c, in, solvability, scalar_field, records);
  return os.good() ? 0 : 1;
}

// ----------------------------------------------------------------- solve --

std::vector<BPoint> polar_grid(const JobConfig& c) {
  std::vector<BPoint> pts;
  pts.reserve(static_cast<std::size_t>(c.rows) * c.cols);
  for (int i = 0; i < c.rows; ++i) {
    const double r = c.rmax * (i + 1) / c.rows;
    for (int j = 0; j < c.cols; ++j) {
      const double th = 2.0 * std::numbers::pi * j / c.cols;
      pts.push_back({r * std::cos(th), r * std::sin(th)});
    }
  }
  return pts;
}

std::vector<BPoint> halfplane_grid(const JobConfig& c) {
  std::vector<BPoint> pts;
  pts.reserve(static_cast<std::size_t>(c.rows) * c.cols);
  for (int k = 0; k < c.rows; ++k) {
    const double y = c.ymin + (c.extent - c.ymin) * k / (c.rows - 1);
    for (int i = 0; i < c.cols; ++i) {
      const double x = -c.extent + 2.0 * c.extent * i / (c.cols - 1);
      pts.push_back({x, y});
    }
  }
  return pts;
}

int run_solve(const JobConfig& c) {
  const BoundaryInput in = load_inputs(c);
  std::vector<std::vector<double>> records;
  std::optional<double> solvability;
  bool scalar_field = false;

  if (c.domain == "halfplane") {
    const HalfplaneSolution sol =
        solve_13_halfplane(in.line1, in.line3, c.a1, c.a2, c.nodes_line);
    for (BPoint p : halfplane_grid(c)) {
      const auto u = components(sol.eval(p));
      records.push_back({p.x, p.y, u[0], u[1], u[2], u[3]});
    }
  } else if (c.domain == "disk") {
    const DiskSolution sol = solve_13_disk(in.circle1, in.circle3, c.a, c.a1, c.a2);
    solvability = sol.solvability;
    for (BPoint p : polar_grid(c)) {
      const auto u = components(sol.eval(p));
      records.push_back({p.x, p.y, u[0], u[1], u[2], u[3]});
    }
  } else {  // main-biharmonic
    const MainBiharmonicSolution sol = solve_main_biharmonic(in.circle1, in.circle3);
    solvability = sol.phi.solvability;
    scalar_field = true;
    for (BPoint p : polar_grid(c)) records.push_back({p.x, p.y, sol.eval(p.x, p.y)});
  }
  return write_output(c, in, solvability, scalar_field, records);
}

// ---------------------------------------------------------------- verify --

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

CheckResult make_check(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, value <= threshold};
}

std::vector<BPoint> verify_probes(Domain d) {
  std::vector<BPoint> pts;
  if (d == Domain::disk) {
    for (int k = 0; k < 32; ++k) {
      const double r = 0.15 + 0.55 * ((k * 29) % 32) / 31.0;
      const double th = 2.0 * std::numbers::pi * k / 32.0 + 0.13;
      pts.push_back({r * std::cos(th), r * std::sin(th)});
    }
  } else {
    for (int k = 0; k < 32; ++k) {
      const double x = -3.0 + 6.0 * ((k * 13) % 32) / 31.0;
      const double y = 0.4 + 2.4 * k / 31.0;
      pts.push_back({x, y});
    }
  }
  return pts;
}

CheckResult check_cauchy_riemann(const FieldEval& f, Domain d) {
  double worst = 0.0, scale = 1.0;
  for (BPoint p : verify_probes(d)) {
    FieldProbe probe{f, d, 1e-4 * (1.0 + norm(p))};
    worst = std::max(worst, cr_residual(probe, p));
    scale = std::max(scale, 1.0 + norm(f(p)));
  }
  return make_check("cauchy_riemann", worst, 1e-6 * scale);
}

// Truncation budget of the 13-point stencil: terms of polynomial degree >= 6
// contribute (h^2/6)(dx^4+dy^4) of the Laplacian even for exactly biharmonic
// fields, so the threshold carries a bound derived from the solution series.
double stencil_truncation_budget(const DiskSolution& sol, double h) {
  double d6 = 0.0;
  auto add = [&](const std::vector<BNumber>& series) {
    for (std::size_t n = 6; n < series.size(); ++n) {
      double fall = 1.0;
      for (std::size_t k = 0; k < 6; ++k) fall *= static_cast<double>(n - k);
      d6 += 8.0 * fall * norm(series[n]);
    }
  };
  add(sol.series1);
  add(sol.series3);
  return h * h / 6.0 * d6;
}

CheckResult check_stencil(const FieldEval& f, Domain d, double extra_budget) {
  const double h = 1e-2;
  double worst = 0.0;
  double scale = 1.0;
  std::vector<BPoint> pts;
  if (d == Domain::disk) {
    for (int k = 0; k < 8; ++k) {
      const double th = 0.3 + k * 0.7;
      pts.push_back({0.1 + 0.07 * k, 0.0});
      pts.back() = {(0.1 + 0.08 * k) * std::cos(th), (0.1 + 0.08 * k) * std::sin(th)};
    }
  } else {
    // stay high above the axis: y^-5 derivative growth of the correction
    // term dominates the h^2 stencil budget near the boundary
    for (int k = 0; k < 8; ++k) pts.push_back({-2.1 + 0.6 * k, 1.8 + 0.15 * k});
  }
  for (BPoint p : pts) {
    for (int comp = 0; comp < 4; ++comp) {
      auto U = [&](double x, double y) { return components(f({x, y}))[comp]; };
      worst = std::max(worst, std::abs(biharmonic_residual(U, p.x, p.y, h)));
      scale = std::max(scale, biharmonic_scale(U, p.x, p.y, h));
    }
  }
  return make_check("biharmonic_stencil", worst, 1e-4 * scale + extra_budget);
}

CheckResult check_boundary_recovery(const FieldEval& f, Domain d, const BoundaryInput& in) {
  double worst = 0.0;
  if (d == Domain::disk) {
    for (int j = 0; j < 32; ++j) {
      const double th = 2.0 * std::numbers::pi * j / 32.0;
      const auto u = components(f({0.999 * std::cos(th), 0.999 * std::sin(th)}));
      worst = std::max(worst, std::abs(u[0] - in.circle1.eval(th)));
      worst = std::max(worst, std::abs(u[2] - in.circle3.eval(th)));
    }
  } else {
    for (int j = 0; j < 16; ++j) {
      const double xi = -5.0 + 10.0 * j / 15.0;
      const auto u = components(f({xi, 1e-4}));
      worst = std::max(worst, std::abs(u[0] - in.line1.eval(xi)));
      worst = std::max(worst, std::abs(u[2] - in.line3.eval(xi)));
    }
  }
  return make_check("boundary_recovery", worst, 1e-3 * (1.0 + in.slope_sup));
}

int run_verify(const JobConfig& c, std::ostream& os) {
  const BoundaryInput in = load_inputs(c);
  std::vector<CheckResult> checks;

  if (c.domain == "halfplane") {
    const HalfplaneSolution sol =
        solve_13_halfplane(in.line1, in.line3, c.a1, c.a2, c.nodes_line);
    FieldEval f = maybe_corrupt([sol](BPoint p) { return sol.eval(p); }, c.corrupt_swap);
    checks.push_back(check_cauchy_riemann(f, Domain::halfplane));
    checks.push_back(check_stencil(f, Domain::halfplane, 0.0));
    checks.push_back(check_boundary_recovery(f, Domain::halfplane, in));
    const BNumber lim = sol.value_at_infinity();
    const BNumber far = f({600.0, 800.0});
    checks.push_back(
        make_check("limit_at_infinity", norm(far - lim), 1e-2 * (1.0 + in.sup_norm)));
  } else {
    const DiskSolution sol = solve_13_disk(in.circle1, in.circle3, c.a, c.a1, c.a2);
    FieldEval f = maybe_corrupt([sol](BPoint p) { return sol.eval(p); }, c.corrupt_swap);
    checks.push_back(check_cauchy_riemann(f, Domain::disk));
    checks.push_back(check_stencil(f, Domain::disk, stencil_truncation_budget(sol, 1e-2)));
    checks.push_back(check_boundary_recovery(f, Domain::disk, in));
    double sing = 0.0;
    for (int j = 0; j < 8; ++j) {
      const double th = 2.0 * std::numbers::pi * j / 8.0 + 0.21;
      sing = std::max({sing,
                         norm(singular_boundary_disk(in.circle1, th) -
                              singular_boundary_disk_extrapolated(in.circle1, th)),
                         norm(singular_boundary_disk(in.circle3, th) -
                              singular_boundary_disk_extrapolated(in.circle3, th))});
    }
    checks.push_back(make_check("singular_value_cross_check", sing, 1e-4 * (1.0 + in.sup_norm)));
    checks.push_back(make_check("solvability", std::abs(sol.solvability),
                                solvability_tolerance(in.circle1, in.circle3)));
    if (c.domain == "main-biharmonic") {
      const MainBiharmonicSolution mb{sol, 64};
      const double h = 1e-4;
      double worst = 0.0;
      for (int j = 0; j < 16; ++j) {
        const double th = 2.0 * std::numbers::pi * j / 16.0;
        auto grad = [&](double r) {
          const double x = r * std::cos(th), y = r * std::sin(th);
          return std::pair{(mb.eval(x + h, y) - mb.eval(x - h, y)) / (2 * h),
                           (mb.eval(x, y + h) - mb.eval(x, y - h)) / (2 * h)};
        };
        const auto [gx1, gy1] = grad(0.98);
        const auto [gx2, gy2] = grad(0.99);
        worst = std::max(worst, std::hypot(2 * gx2 - gx1 - in.circle1.eval(th),
                                           2 * gy2 - gy1 - in.circle3.eval(th)));
      }
      checks.push_back(
          make_check("gradient_boundary", worst, 1e-3 * (1.0 + in.slope_sup)));
    }
  }

  bool all_pass = true;
  json jchecks = json::array();
  for (const CheckResult& r : checks) {
    all_pass = all_pass && r.pass;
    jchecks.push_back(
        {{"name", r.name}, {"value", r.value}, {"threshold", r.threshold}, {"pass", r.pass}});
  }
  os << json{{"domain", c.domain}, {"checks", jchecks}, {"pass", all_pass}}.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

// -------------------------------------------------------------- selftest --

int run_selftest(int circle_nodes, bool bad_table, std::ostream& os) {
  detail::MulTable table;
  if (bad_table) table.e22_e2 = Complex{0.0, 1.9};

  struct Row {
    std::string name;
    double err;
  };
  std::vector<Row> rows;

  rows.push_back({"e2*e2 = e1 + 2i e2", norm(detail::mul(e2(), e2(), table) - (e1() + 2.0 * kI * e2()))});
  rows.push_back({"rho^2 = 0", norm(detail::mul(rho(), rho(), table))});
  const BNumber s = detail::mul(e1(), e1(), table) + detail::mul(e2(), e2(), table);
  rows.push_back({"(e1^2+e2^2)^2 = 0", norm(detail::mul(s, s, table))});

  // Tiny-radius points keep the trapezoid rule exact to 1e-9 even at 8 nodes.
  const BPoint pts[] = {{0.008, 0.004}, {-0.006, 0.007}, {0.005, -0.009},
                        {-0.007, -0.003}, {0.009, 0.002}, {0.0, 0.006}};
  const CircleData one{1.0, {}, {}};
  const CircleData xdat{0.0, {1.0}, {}};
  const CircleData ydat{0.0, {}, {1.0}};
  double e_one = 0.0, e_x = 0.0, e_y = 0.0;
  for (BPoint p : pts) {
    e_one = std::max(e_one, norm(biharmonic_schwartz_disk_quad(one, p, circle_nodes, table) - e1()));
    e_x = std::max(e_x, norm(biharmonic_schwartz_disk_quad(xdat, p, circle_nodes, table) -
                             0.5 * ((3.0 * e1() + kI * e2()) * embed(p))));
    e_y = std::max(e_y, norm(biharmonic_schwartz_disk_quad(ydat, p, circle_nodes, table) -
                             0.5 * ((-3.0 * kI * e1() + e2()) * embed(p))));
  }
  rows.push_back({"S_D[1] = e1", e_one});
  rows.push_back({"S_D[x] = (3 e1 + i e2)/2 zeta", e_x});
  rows.push_back({"S_D[y] = (-3i e1 + e2)/2 zeta", e_y});

  bool pass = true;
  os << "selftest (circle nodes = " << circle_nodes << ")\n";
  for (const Row& r : rows) {
    const bool ok = r.err <= 1e-9;
    pass = pass && ok;
    os << (ok ? "  ok    " : "  FAIL  ") << r.name << "  err=" << format_double(r.err) << "\n";
  }
  os << (pass ? "selftest: pass\n" : "selftest: FAIL\n");
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schwartz-type boundary value problems in the biharmonic algebra"};
  app.require_subcommand(1);

  JobConfig cfg;
  int nodes_flag = 0;

  if (const char* env = std::getenv("BIHARM_NODES")) {
    const int n = std::atoi(env);
    if (n >= 4) {
      cfg.nodes_line = n;
      cfg.nodes_circle = n;
    }
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--domain", cfg.domain, "halfplane | disk | main-biharmonic")
        ->check(CLI::IsMember({"halfplane", "disk", "main-biharmonic"}));
    sub->add_option("--u1", cfg.u1_path, "boundary data file for u1 (omit for zero data)");
    sub->add_option("--u3", cfg.u3_path, "boundary data file for u3 (omit for zero data)");
    sub->add_option("--a", cfg.a, "free constant a (disk only)");
    sub->add_option("--a1", cfg.a1, "free constant a1");
    sub->add_option("--a2", cfg.a2, "free constant a2");
    sub->add_option("--nodes", nodes_flag, "quadrature node count override");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve and write a field grid");
  add_common(solve);
  solve->add_option("--grid", cfg.grid, "grid resolution NxM (rows x columns)");
  solve->add_option("--rmax", cfg.rmax, "largest grid radius for disk domains")
      ->check(CLI::Range(1e-6, 0.999999));
  solve->add_option("--extent", cfg.extent, "half-plane grid half-width / height");
  solve->add_option("--ymin", cfg.ymin, "smallest grid height above the axis");
  solve->add_option("--out", cfg.out_path, "output file")->required();
  solve->add_option("--format", cfg.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run verification checks, emit JSON report");
  add_common(verify);
  verify->add_option("--out", cfg.out_path, "report file (default stdout)");
  verify->add_flag("--corrupt-swap", cfg.corrupt_swap, "negative control: swap components")
      ->group("");  // hidden

  CLI::App* selftest = app.add_subcommand("selftest", "closed-form identity checks");
  bool bad_table = false;
  selftest->add_option("--nodes", nodes_flag, "quadrature node count override");
  selftest->add_flag("--bad-table", bad_table, "negative control: corrupt the multiplication table")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (nodes_flag >= 4) {
    cfg.nodes_line = nodes_flag;
    cfg.nodes_circle = nodes_flag;
  }

  try {
    if (selftest->parsed()) return run_selftest(cfg.nodes_circle, bad_table, std::cout);
    if (!parse_grid(cfg)) {
      std::cerr << "error: invalid --grid (need NxM with N,M >= 2)\n";
      return 1;
    }
    if (cfg.ymin <= 0.0) {
      std::cerr << "error: --ymin must be > 0\n";
      return 1;
    }
    if (solve->parsed()) return run_solve(cfg);
    if (!cfg.out_path.empty()) {
      std::ofstream os(cfg.out_path, std::ios::binary);
      if (!os) {
        std::cerr << "error: cannot open output file: " << cfg.out_path << "\n";
        return 1;
      }
      return run_verify(cfg, os);
    }
    return run_verify(cfg, std::cout);
  } catch (const UnsolvableError& e) {
    std::cerr << "unsolvable: contour integral = " << format_double(e.integral) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
