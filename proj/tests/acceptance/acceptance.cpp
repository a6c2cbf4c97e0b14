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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gravrotor/atlas.hpp"
#include "gravrotor/constraints.hpp"
#include "gravrotor/phase_gate.hpp"
#include "gravrotor/rotor_dynamics.hpp"

using namespace gravrotor;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Line {
  std::string id;
  bool pass;
  std::string detail;
};

class Report {
 public:
  void add(std::string id, bool pass, std::string detail) { lines_.push_back({std::move(id), pass, std::move(detail)}); }

  void run(const std::string& id, const std::string& title, const std::function<void(Report&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t first = lines_.size();
    try {
      body(*this);
    } catch (const std::exception& e) {
      add(id, false, fmt::format("threw: {}", e.what()));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool all = true;
    for (std::size_t k = first; k < lines_.size(); ++k) all = all && lines_[k].pass;
    fmt::print("{} {:<3} {} ({:.2f} s)\n", all ? "PASS" : "FAIL", id, title, secs);
    for (std::size_t k = first; k < lines_.size(); ++k) {
      fmt::print("       {} {:<4} {}\n", lines_[k].pass ? "pass" : "FAIL", lines_[k].id, lines_[k].detail);
    }
    failed_ += all ? 0 : 1;
  }

  int failed() const { return failed_; }

 private:
  std::vector<Line> lines_;
  int failed_ = 0;
};

// 40-digit evaluations with CODATA 2018 constants.
constexpr double kPhiMass = 1.0126270992504629e-05;     // dM = 4e-18 kg, T = 1 s, r = 1 um
constexpr double kMassOf04J = 4.450600224214474e-18;    // kg
constexpr double kEnergyOf4e18 = 0.35950207149472707;  // J
constexpr double kPhotonMoment = 3.589844140896181e-4;  // A m^2 at omega = 2 pi, T3 = T4 = 1e3 s

void mass_energy(Report& r) {
  const double dm = mass_equivalent(0.4);
  r.add("1", rel(dm, kMassOf04J) < 1e-12 && rel(dm, 4e-18) <= 0.12,
        fmt::format("mass_equivalent(0.4 J) = {:.4e} kg, {:.1f}% from 4e-18 kg", dm, 100 * rel(dm, 4e-18)));
  const double e = 4e-18 * kCodata2018.c * kCodata2018.c;
  r.add("1", rel(e, kEnergyOf4e18) < 1e-12 && rel(e, 0.4) <= 0.12,
        fmt::format("E(4e-18 kg) = {:.4f} J, {:.1f}% from 0.4 J", e, 100 * rel(e, 0.4)));
}

void back_of_envelope(Report& r) {
  const double phi = entangling_phase_from_mass(4e-18, 1.0, 1e-6);
  r.add("2", rel(phi, kPhiMass) < 1e-3, fmt::format("phi = {:.6e} rad, reference {:.6e}", phi, kPhiMass));
  const double via_branches = branch_phases({1e-10, 4e-18}, 1.0, 1e-6).entangling_phase();
  r.add("2", rel(via_branches, kPhiMass) < 1e-3, fmt::format("branch combination = {:.6e} rad", via_branches));
}

void identities(Report& r) {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const auto draw = [&] { return std::pow(10.0, u(rng)); };
  double worst_mass = 0.0, worst_protocol = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double dM = draw() * 1e-18, T = draw(), dist = draw();
    const double c2 = kCodata2018.c * kCodata2018.c;
    worst_mass = std::max(worst_mass, rel(entangling_phase_from_energy(dM * c2, T, dist),
                                          entangling_phase_from_mass(dM, T, dist)));
    const double I = draw(), w = draw(), T3 = draw(), T4 = draw();
    worst_protocol = std::max(worst_protocol, rel(protocol_phase(I, w, dist, T3, T4),
                                                  entangling_phase_from_energy(rotational_energy(I, w),
                                                                               0.4 * T3 + T4, dist)));
  }
  r.add("3", worst_mass <= 1e-12, fmt::format("phi_energy vs phi_mass, worst relative {:.2e}", worst_mass));
  r.add("3", worst_protocol <= 1e-12, fmt::format("protocol phase vs 1/2 I w^2 route, worst {:.2e}", worst_protocol));
}

void dynamics(Report& r) {
  constexpr double tol = 1e-6;
  for (double theta0 : {1e-10, 1e-8, 1e-6, 1e-4, 1e-3}) {
    const double t0_formula = t0_empirical(1.0, 1.0, theta0);
    SpinUpTrajectory traj = integrate_spin_up({1.0, 1.0, theta0, t0_formula + 20.0}, tol);

    double worst = 0.0;
    for (const auto& s : traj.samples) {
      if (s.theta > 0.1) break;
      worst = std::max(worst, rel(s.theta, small_angle_theta(s.t, theta0, 1.0, 1.0)));
    }
    r.add("4a", worst < 0.01, fmt::format("theta0 {:.0e}: cosh deviation {:.2e} while theta <= 0.1", theta0, worst));

    const double fitted = fit_t0(traj);
    const double dev = rel(fitted, t0_formula);
    r.add("4b", dev <= 0.10,
          fmt::format("theta0 {:.0e}: t0 fit {:.4f} vs ln(1/theta0) {:.4f} ({:.1f}%)", theta0, fitted, t0_formula,
                      100 * dev));

    const auto crossing = find_quarter_turn(traj);
    const double target = omega_at_quarter_turn(1.0, 1.0);
    const double w = crossing ? crossing->omega : 0.0;
    r.add("4c", crossing && rel(w, target) <= 0.05,
          fmt::format("theta0 {:.0e}: omega at pi/2 {:.5f} vs pi/2 = {:.5f} ({:.1f}%)", theta0, w, target,
                      100 * rel(w, target)));
  }
}

void region_overlap(Report& r) {
  SweepSpec spec;  // 128 x 128 sphere defaults
  spec.relax = 2.0;
  const FeasibilityGrid g = sweep(spec);
  std::size_t total = 0, in_box = 0;
  for (std::size_t i = 0; i < g.radii.size(); ++i) {
    for (std::size_t j = 0; j < g.omegas.size(); ++j) {
      if (!g.overlap(i, j)) continue;
      ++total;
      if (g.radii[i] >= 0.05 && g.radii[i] <= 0.5 && g.omegas[j] >= 1.0 && g.omegas[j] <= 30.0) ++in_box;
    }
  }
  r.add("5", total > 0 && in_box > 0,
        fmt::format("overlap {} cells, {} with R in [0.05, 0.5] m and omega in [1, 30] rad/s", total, in_box));

  const auto rep = evaluate_point(RotorGeometry::sphere(0.15), 2 * pi, ProtocolParams{}, 2.0);
  r.add("5", rel(rep.phi, 1.22e-3) <= 0.02, fmt::format("benchmark phi = {:.4e} rad", rep.phi));
  r.add("5", rep.phi_ok && rep.centrifugal_ok, "benchmark passes phase and centrifugal constraints");
  r.add("5", rep.omega_achievable >= pi && rep.spin_up_ok,
        fmt::format("benchmark omega_achievable = {:.4f} rad/s >= {:.4f}", rep.omega_achievable, pi));
}

void disc_comparison(Report& r) {
  SweepSpec sphere;
  sphere.relax = 2.0;
  SweepSpec disc = sphere;
  disc.shape = Shape::disc;
  const auto cmp = compare_geometries(sphere, disc);
  r.add("6", cmp.disc_cells > cmp.sphere_cells,
        fmt::format("disc {} cells vs sphere {} cells", cmp.disc_cells, cmp.sphere_cells));
}

void properties(Report& r) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  bool conc_ok = true;
  for (int i = 0; i < 10000; ++i) {
    const double phi = u(rng);
    const double c = concurrence(phi);
    conc_ok = conc_ok && c >= 0.0 && c <= 1.0 && std::abs(concurrence(phi + pi / 2) - c) < 1e-12;
  }
  conc_ok = conc_ok && concurrence(0.0) == 0.0 && std::abs(concurrence(pi / 4) - 1.0) < 1e-15;
  r.add("7", conc_ok, "concurrence within [0, 1] with period pi/2");

  std::uniform_real_distribution<double> lg(-3.0, 3.0);
  double worst16 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double I = std::pow(10.0, lg(rng)), w = std::pow(10.0, lg(rng)), d = std::pow(10.0, lg(rng));
    worst16 = std::max(worst16, rel(protocol_phase(I, 2 * w, d, 1e3, 1e3), 16.0 * protocol_phase(I, w, d, 1e3, 1e3)));
  }
  r.add("7", worst16 <= 1e-12, fmt::format("doubling omega scales phi by 16, worst {:.2e}", worst16));

  bool edge_ok = true;
  const ProtocolParams params;
  for (double R : {1e-3, 0.01, 0.15, 0.7}) {
    const auto g = RotorGeometry::sphere(R);
    const double w_lim = centrifugal_limit(R, g.material().sound_speed);
    const double below = std::nextafter(w_lim, 0.0), above = std::nextafter(w_lim, 1e300);
    for (double w : {std::nextafter(below, 0.0), below, w_lim, above, std::nextafter(above, 1e300)}) {
      edge_ok = edge_ok && evaluate_point(g, w, params).centrifugal_ok == (w * R < g.material().sound_speed);
    }
    edge_ok = edge_ok && evaluate_point(g, w_lim * (1 - 1e-12), params).centrifugal_ok &&
              !evaluate_point(g, w_lim * (1 + 1e-12), params).centrifugal_ok;
  }
  r.add("7", edge_ok, "centrifugal flag flips exactly at omega R = v_s");

  double worst_res = 0.0;
  bool res_ok = true;
  int runs = 0;
  for (double tol : {1e-4, 1e-6, 1e-8}) {
    for (double theta0 : {1e-10, 1e-6, 1e-3, 0.3, pi / 2}) {
      for (double rate : {0.01, 1.0, 25.0}) {
        const double scale = 1.0 / std::sqrt(rate);
        const auto traj = integrate_spin_up({2.0, 2.0 * rate, theta0, scale * (std::log(1 / theta0) + 15.0)}, tol);
        worst_res = std::max(worst_res, traj.stats.max_energy_residual / tol);
        res_ok = res_ok && traj.stats.max_energy_residual <= tol;
        ++runs;
      }
    }
  }
  r.add("7", res_ok, fmt::format("energy-work balance on {} trajectories, worst residual {:.2f} tol", runs, worst_res));

  const SweepSpec spec;
  const auto g1 = sweep(spec, 1);
  const bool same = sweep(spec, 4) == g1 && sweep(spec, 8) == g1;
  r.add("7", same, "128x128 sweep bit-identical with 1, 4 and 8 threads");
}

void radiation(Report& r) {
  const double m = photon_limited_moment(2 * pi, 1e3, 1e3);
  r.add("8", rel(m, kPhotonMoment) <= 0.005, fmt::format("photon-limited moment {:.5e} A m^2", m));
  const double n = radiation_budget(2 * pi, m, 1e3, 1e3).expected_photons;
  r.add("8", std::abs(n - 1.0) <= 0.005, fmt::format("<n> at that moment = {:.6f}", n));
}

}  // namespace

int main() {
  Report report;
  report.run("1", "mass-energy consistency", mass_energy);
  report.run("2", "back-of-envelope entangling phase", back_of_envelope);
  report.run("3", "phase identities over random draws", identities);
  report.run("4", "spin-up dynamics against closed forms", dynamics);
  report.run("5", "sphere feasibility overlap and benchmark point", region_overlap);
  report.run("6", "disc overlap exceeds sphere overlap", disc_comparison);
  report.run("7", "property suite", properties);
  report.run("8", "radiation limits", radiation);
  fmt::print("{} of 8 criteria failed\n", report.failed());
  return report.failed() == 0 ? 0 : 1;
}
