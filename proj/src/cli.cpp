// Copyright 2026 The gravrotor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gravrotor/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gravrotor/atlas.hpp"
#include "gravrotor/config.hpp"
#include "gravrotor/constraints.hpp"
#include "gravrotor/errors.hpp"
#include "gravrotor/rotor_dynamics.hpp"
#include "gravrotor/svg.hpp"

namespace gravrotor::cli {

namespace {

struct Overrides {
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::string> shape;
  std::optional<double> radius;
  std::optional<double> omega;
  std::optional<double> theta0;
  std::optional<double> relax;
  std::optional<std::string> grid;
  std::optional<unsigned> threads;
};

void add_common_options(CLI::App& app, Overrides& o) {
  app.add_option("--config", o.config_path, "key = value configuration file");
  app.add_option("--out", o.out_dir, "output directory");
  app.add_option("--shape", o.shape, "sphere or disc");
  app.add_option("--R", o.radius, "rotor radius (m)");
  app.add_option("--omega", o.omega, "target angular velocity (rad/s)");
  app.add_option("--theta0", o.theta0, "initial orientation angle (rad)");
  app.add_option("--relax", o.relax, "spin-up relaxation factor (>= 1)");
  app.add_option("--grid", o.grid, "sweep resolution as NRxNOMEGA");
  app.add_option("--threads", o.threads, "sweep worker threads (0 = all cores)");
}

RunConfig resolve_config(const Overrides& o) {
  RunConfig cfg = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
  std::vector<std::string> errors;
  if (o.out_dir) cfg.out_dir = *o.out_dir;
  if (o.shape) {
    try {
      cfg.sweep.shape = parse_shape(*o.shape);
    } catch (const std::exception& e) {
      errors.emplace_back(fmt::format("--shape: {}", e.what()));
    }
  }
  if (o.relax) {
    if (!(*o.relax >= 1.0) || !std::isfinite(*o.relax)) {
      errors.emplace_back("--relax must be a finite factor >= 1");
    } else {
      cfg.sweep.relax = *o.relax;
    }
  }
  if (o.theta0) {
    if (!(*o.theta0 > 0.0) || *o.theta0 > std::numbers::pi / 2) {
      errors.emplace_back("--theta0 must lie in (0, pi/2]");
    } else {
      cfg.dynamics.theta0 = *o.theta0;
    }
  }
  if (o.grid) {
    std::size_t nr = 0, nw = 0;
    char sep = 0;
    std::istringstream in(*o.grid);
    if (!(in >> nr >> sep >> nw) || (sep != 'x' && sep != 'X') || !in.eof() || nr < 2 || nw < 2) {
      errors.emplace_back(fmt::format("--grid expects NxM with N, M >= 2, got '{}'", *o.grid));
    } else {
      cfg.sweep.radius.count = nr;
      cfg.sweep.omega.count = nw;
    }
  }
  if (o.threads) cfg.threads = *o.threads;
  if (o.radius && (!(*o.radius > 0.0) || !std::isfinite(*o.radius))) errors.emplace_back("--R must be positive");
  if (o.omega && (!(*o.omega > 0.0) || !std::isfinite(*o.omega))) errors.emplace_back("--omega must be positive");
  if (!errors.empty()) throw ConfigError(std::move(errors));
  return cfg;
}

// Collects artifacts in memory so nothing is written unless the run succeeds.
class Artifacts {
 public:
  void add(std::string name, std::string content) { files_.emplace(std::move(name), std::move(content)); }

  void write(const std::filesystem::path& dir, std::ostream& err) const {
    std::filesystem::create_directories(dir);
    for (const auto& [name, content] : files_) {
      const auto path = dir / name;
      std::ofstream f(path, std::ios::binary);
      f << content;
      if (!f) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
      err << "wrote " << path.string() << '\n';
    }
  }

 private:
  std::map<std::string, std::string> files_;
};

std::string csv_of(const FeasibilityGrid& grid) {
  std::ostringstream s;
  write_grid_csv(s, grid);
  return s.str();
}

int cmd_point(const RunConfig& cfg, const Overrides& o, std::ostream& out) {
  if (!o.radius || !o.omega) throw ConfigError({"point needs both --R and --omega"});
  const RotorGeometry geom = cfg.sweep.geometry_at(*o.radius);
  const ConstraintReport rep = evaluate_point(geom, *o.omega, cfg.sweep.params, cfg.sweep.relax);
  out << to_json(rep).dump(2) << '\n';
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FeasibilityGrid grid = sweep(cfg.sweep, cfg.threads);
  const OverlapStats stats = overlap_stats(grid);
  nlohmann::json summary = to_json(stats);
  summary["shape"] = std::string(to_string(cfg.sweep.shape));
  summary["grid"] = {grid.radii.size(), grid.omegas.size()};
  summary["relax"] = cfg.sweep.relax;
  summary["invalid_cells"] = grid.invalid_cells;

  Artifacts files;
  files.add("grid.csv", csv_of(grid));
  files.add("regions.svg", render_regions_svg(grid));
  files.add("summary.json", summary.dump(2) + "\n");
  files.write(cfg.out_dir, err);
  out << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_dynamics(const RunConfig& cfg, const Overrides& o, std::ostream& out, std::ostream& err) {
  SpinUpProblem problem{1.0, 1.0, cfg.dynamics.theta0, cfg.dynamics.duration};
  if (o.radius) {
    // physical rotor: torque from the moment budget at the target speed, run for T3
    if (!o.omega) throw ConfigError({"dynamics with --R also needs --omega (target angular velocity)"});
    const RotorGeometry geom = cfg.sweep.geometry_at(*o.radius);
    const auto& params = cfg.sweep.params;
    const SpinUpEstimate est = achievable_omega(geom, params, *o.omega);
    problem.inertia = moment_of_inertia(geom);
    problem.max_torque = est.torque;
    problem.theta0 = o.theta0 ? *o.theta0 : est.theta0;
    problem.duration = params.T3;
  }
  SpinUpTrajectory traj = integrate_spin_up(problem, cfg.dynamics.tol);

  nlohmann::json summary{{"inertia", problem.inertia},
                         {"max_torque", problem.max_torque},
                         {"theta0", problem.theta0},
                         {"duration", problem.duration},
                         {"samples", traj.samples.size()},
                         {"rejected_steps", traj.stats.rejected_steps},
                         {"max_energy_residual", traj.stats.max_energy_residual},
                         {"final_theta", traj.samples.back().theta},
                         {"final_omega", traj.samples.back().omega}};
  try {
    summary["t0_fit"] = fit_t0(traj);
  } catch (const FitFailure& e) {
    err << "note: " << e.what() << '\n';
  }
  if (problem.max_torque > 0.0 && problem.theta0 < 1.0) {
    summary["t0_formula"] = t0_empirical(problem.inertia, problem.max_torque, problem.theta0);
  }

  std::ostringstream csv;
  write_trajectory_csv(csv, traj);
  Artifacts files;
  files.add("trajectory.csv", csv.str());
  files.add("trajectory.svg", render_trajectory_svg(traj));
  files.write(cfg.out_dir, err);
  out << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_fit_t0(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& d = cfg.dynamics;
  const std::vector<double> thetas =
      d.theta0_count == 1 ? std::vector<double>{d.theta0_min} : LogAxis{d.theta0_min, d.theta0_max, d.theta0_count}.nodes();

  std::string csv =
      "theta0,t0_fit,t0_formula,t0_quarter_exact,t0_quarter_approx,t0_quarter_ode,omega_quarter_ode,"
      "omega_quarter_formula\n";
  for (double theta0 : thetas) {
    const double t0 = t0_empirical(1.0, 1.0, theta0);
    SpinUpTrajectory traj = integrate_spin_up({1.0, 1.0, theta0, t0 + d.fit_tail}, d.tol);
    const double fitted = fit_t0(traj);
    const QuarterTurnTime quarter = quarter_turn_time(theta0, 1.0, 1.0);
    const auto crossing = find_quarter_turn(traj);
    if (!crossing) throw NumericalFailure(fmt::format("theta0 = {:.3g}: no quarter turn within the run", theta0));
    csv += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", theta0, fitted, t0,
                       quarter.exact, quarter.approx, crossing->t, crossing->omega, omega_at_quarter_turn(1.0, 1.0));
    out << fmt::format("theta0 {:9.3g}  t0_fit {:8.4f}  ln(1/theta0) {:8.4f}  omega(pi/2) {:7.4f}\n", theta0, fitted,
                       t0, crossing->omega);
  }
  Artifacts files;
  files.add("t0_fit.csv", std::move(csv));
  files.write(cfg.out_dir, err);
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SweepSpec sphere_spec = cfg.sweep;
  sphere_spec.shape = Shape::sphere;
  SweepSpec disc_spec = cfg.sweep;
  disc_spec.shape = Shape::disc;
  const FeasibilityGrid sphere_grid = sweep(sphere_spec, cfg.threads);
  const FeasibilityGrid disc_grid = sweep(disc_spec, cfg.threads);
  const GeometryComparison cmp = compare_geometries(sphere_grid, disc_grid);
  nlohmann::json j = to_json(cmp);
  j["sphere"] = to_json(overlap_stats(sphere_grid));
  j["disc"] = to_json(overlap_stats(disc_grid));

  Artifacts files;
  files.add("compare.json", j.dump(2) + "\n");
  files.add("regions_sphere.svg", render_regions_svg(sphere_grid));
  files.add("regions_disc.svg", render_regions_svg(disc_grid));
  files.write(cfg.out_dir, err);
  out << to_json(cmp).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feasibility analysis for gravitationally entangled rotors", "gravrotor"};
  app.require_subcommand(1);
  Overrides o;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"point", "evaluate the constraints at one (R, omega) point"},
           {"sweep", "map the constraint regions over (R, omega)"},
           {"dynamics", "integrate the spin-up ODE"},
           {"fit-t0", "fit the ramp delay over a range of theta0"},
           {"compare-geometries", "compare sphere and disc overlap regions"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common_options(*sub, o);
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    const RunConfig cfg = resolve_config(o);
    if (subs["point"]->parsed()) return cmd_point(cfg, o, out);
    if (subs["sweep"]->parsed()) return cmd_sweep(cfg, out, err);
    if (subs["dynamics"]->parsed()) return cmd_dynamics(cfg, o, out, err);
    if (subs["fit-t0"]->parsed()) return cmd_fit_t0(cfg, out, err);
    return cmd_compare(cfg, out, err);
  } catch (const ConfigError& e) {
    for (const auto& m : e.messages()) err << "config error: " << m << '\n';
    return kExitConfigError;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumericalFailure;
  }
}

}  // namespace gravrotor::cli
