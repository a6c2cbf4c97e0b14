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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace gravrotor {

/// Spin-up of the |1> branch: I theta'' = tau_max |sin theta| from rest.
///
/// The |sin| form encodes the alternating field: the field is flipped every
/// half turn so the torque never opposes the motion. Flips are instantaneous.
struct SpinUpProblem {
  double inertia;     // kg m^2
  double max_torque;  // N m, m B (zero gives a static rotor)
  double theta0;      // rad, in (0, pi/2]
  double duration;    // s

  void validate() const;
};

struct SpinUpSample {
  double t;      // s
  double theta;  // rad
  double omega;  // rad/s
  double swept;  // theta - theta0, kept separately so tiny theta0 loses nothing
};

struct SolverStats {
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double max_energy_residual = 0.0;  // max |E_kin - W| / E_kin over samples
};

struct SpinUpTrajectory {
  SpinUpProblem problem;
  std::vector<SpinUpSample> samples;
  std::optional<double> t0_fit;
  SolverStats stats;
};

inline constexpr std::size_t kDefaultStepBudget = 5'000'000;

/// Adaptive Dormand-Prince 5(4) integration from (theta0, 0).
///
/// `tol` bounds both the energy-work residual at every sample and the error of
/// linearly interpolating omega between consecutive samples. Throws
/// NumericalFailure if the budget runs out or the residual cannot be met.
SpinUpTrajectory integrate_spin_up(const SpinUpProblem& problem, double tol,
                                   std::size_t max_steps = kDefaultStepBudget);

/// Work done by the |sin| torque law per unit tau_max while turning from
/// theta0 to theta0 + swept, i.e. the integral of |sin| over that range.
double torque_work(double theta0, double swept);

/// sqrt(I / tau_max) ln(1 / theta0); requires 0 < theta0 < 1.
double t0_empirical(double inertia, double max_torque, double theta0);

/// Piecewise-linear ramp: 0 before t0, (2/pi)(tau_max/I)(t - t0) afterwards.
double omega_empirical(double t, double inertia, double max_torque, double t0);

/// theta0 cosh(sqrt(tau_max/I) t), the small-angle solution.
double small_angle_theta(double t, double theta0, double inertia, double max_torque);

struct QuarterTurnTime {
  double exact;   // sqrt(I/tau) arccosh(pi / (2 theta0))
  double approx;  // sqrt(I/tau) ln(pi / theta0)
};

/// Small-angle estimate of the time to reach theta = pi/2. Zero for theta0 >= pi/2.
QuarterTurnTime quarter_turn_time(double theta0, double inertia, double max_torque);

/// (pi/2) sqrt(tau_max / I), the small-angle estimate of omega at pi/2.
double omega_at_quarter_turn(double inertia, double max_torque);

/// Energy-conserving value sqrt(2 tau_max cos(theta0) / I) of omega at pi/2.
double omega_at_quarter_turn_exact(double theta0, double inertia, double max_torque);

struct QuarterTurnCrossing {
  double t;
  double omega;
};

/// First crossing of theta = pi/2 in the sampled trajectory (linear interpolation).
std::optional<QuarterTurnCrossing> find_quarter_turn(const SpinUpTrajectory& traj);

/// Least-squares fit of omega_empirical to the samples after the quarter turn,
/// slope fixed at (2/pi)(tau_max/I), t0 free. Stores and returns the result.
/// Throws FitFailure if there is no linear tail to fit.
double fit_t0(SpinUpTrajectory& traj);

/// CSV with header `t,theta,omega`, one row per sample.
void write_trajectory_csv(std::ostream& out, const SpinUpTrajectory& traj);

}  // namespace gravrotor
