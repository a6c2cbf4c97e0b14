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

#include "gravrotor/rotor_dynamics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "gravrotor/errors.hpp"

namespace gravrotor {

namespace {

using std::numbers::pi;

struct State {
  double swept;
  double omega;
};

State operator+(State a, State b) { return {a.swept + b.swept, a.omega + b.omega}; }
State operator*(double s, State a) { return {s * a.swept, s * a.omega}; }

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

class SpinUpRhs {
 public:
  SpinUpRhs(double theta0, double rate) : theta0_(theta0), rate_(rate) {}
  State operator()(const State& y) const {
    return {y.omega, rate_ * std::abs(std::sin(theta0_ + y.swept))};
  }

 private:
  double theta0_;
  double rate_;  // tau_max / I
};

double energy_residual(const SpinUpProblem& p, const State& y) {
  const double kinetic = 0.5 * p.inertia * y.omega * y.omega;
  const double work = p.max_torque * torque_work(p.theta0, y.swept);
  if (kinetic > 0.0) return std::abs(kinetic - work) / kinetic;
  return work == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

void SpinUpProblem::validate() const {
  if (!(inertia > 0.0) || !std::isfinite(inertia)) throw std::domain_error("inertia must be positive");
  if (!(max_torque >= 0.0) || !std::isfinite(max_torque)) {
    throw std::domain_error("max_torque must be non-negative");
  }
  if (!(theta0 > 0.0) || theta0 > pi / 2) throw std::domain_error("theta0 must lie in (0, pi/2]");
  if (!(duration > 0.0) || !std::isfinite(duration)) throw std::domain_error("duration must be positive");
}

double torque_work(double theta0, double swept) {
  const double theta = theta0 + swept;
  if (theta <= pi) {
    // cos(theta0) - cos(theta) without cancellation at tiny angles
    return 2.0 * std::sin(theta0 + 0.5 * swept) * std::sin(0.5 * swept);
  }
  const auto primitive = [](double x) {
    const double turns = std::floor(x / pi);
    return 2.0 * turns + 1.0 - std::cos(x - turns * pi);
  };
  return primitive(theta) - (1.0 - std::cos(theta0));
}

SpinUpTrajectory integrate_spin_up(const SpinUpProblem& problem, double tol, std::size_t max_steps) {
  problem.validate();
  if (!(tol > 0.0) || tol > 1e-2) throw std::domain_error("tolerance must lie in (0, 1e-2]");

  SpinUpTrajectory traj;
  traj.problem = problem;

  const double rate = problem.max_torque / problem.inertia;
  const double natural_rate = std::sqrt(rate);
  const SpinUpRhs rhs(problem.theta0, rate);

  // Linear interpolation of omega errs by h^2/8 |omega''| <= h^2/8 (tau/I) omega.
  const double h_max = natural_rate > 0.0 ? std::min(problem.duration, 0.9 * std::sqrt(8.0 * tol) / natural_rate)
                                          : problem.duration;
  // Relative local errors add up over the run; budget a tenth of tol for their sum.
  const double expected_steps = std::ceil(problem.duration / h_max);
  const double rtol = std::clamp(0.1 * tol / expected_steps, 1e-14, tol * 1e-3);
  constexpr double atol = 1e-300;
  const double h_min = 1e-14 * problem.duration;

  double t = 0.0;
  State y{0.0, 0.0};
  double h = natural_rate > 0.0 ? std::min(h_max, 1e-2 / natural_rate) : h_max;
  State k1 = rhs(y);

  traj.samples.push_back({0.0, problem.theta0, 0.0, 0.0});

  while (t < problem.duration) {
    if (traj.stats.accepted_steps + traj.stats.rejected_steps >= max_steps) {
      throw NumericalFailure(fmt::format(
          "spin-up integration exhausted its budget of {} steps at t = {:.6g} s of {:.6g} s "
          "(tol {:.3g}, accepted {}, rejected {})",
          max_steps, t, problem.duration, tol, traj.stats.accepted_steps, traj.stats.rejected_steps));
    }
    bool last = false;
    if (t + h >= problem.duration) {
      h = problem.duration - t;
      last = true;
    }

    const State k2 = rhs(y + (h * a21) * k1);
    const State k3 = rhs(y + h * (a31 * k1 + a32 * k2));
    const State k4 = rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const State k5 = rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const State k6 = rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const State y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const State k7 = rhs(y_new);
    const State err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const auto scaled = [&](double e, double a, double b) {
      return std::abs(e) / (atol + rtol * std::max(std::abs(a), std::abs(b)));
    };
    const double err_norm = std::max(scaled(err.swept, y.swept, y_new.swept),
                                     scaled(err.omega, y.omega, y_new.omega));

    if (err_norm <= 1.0) {
      t = last ? problem.duration : t + h;
      y = y_new;
      k1 = k7;  // FSAL
      ++traj.stats.accepted_steps;
      traj.samples.push_back({t, problem.theta0 + y.swept, y.omega, y.swept});
      traj.stats.max_energy_residual = std::max(traj.stats.max_energy_residual, energy_residual(problem, y));
      const double grow = err_norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0);
      h = std::min(h * grow, h_max);
    } else {
      ++traj.stats.rejected_steps;
      h *= std::clamp(0.9 * std::pow(err_norm, -0.2), 0.1, 0.9);
      if (h < h_min) {
        throw NumericalFailure(fmt::format("spin-up step size underflow at t = {:.6g} s (h = {:.3g} s)", t, h));
      }
    }
  }

  if (traj.stats.max_energy_residual > tol) {
    throw NumericalFailure(fmt::format(
        "spin-up energy-work residual {:.3g} exceeds tolerance {:.3g} after {} steps",
        traj.stats.max_energy_residual, tol, traj.stats.accepted_steps));
  }
  return traj;
}

double t0_empirical(double inertia, double max_torque, double theta0) {
  if (!(theta0 > 0.0) || !(theta0 < 1.0)) {
    throw std::domain_error("t0 formula requires 0 < theta0 < 1");
  }
  if (!(inertia > 0.0) || !(max_torque > 0.0)) throw std::domain_error("inertia and torque must be positive");
  return std::sqrt(inertia / max_torque) * std::log(1.0 / theta0);
}

double omega_empirical(double t, double inertia, double max_torque, double t0) {
  if (!(t >= 0.0)) throw std::domain_error("time must be non-negative");
  if (t < t0) return 0.0;
  return 2.0 / pi * (max_torque / inertia) * (t - t0);
}

double small_angle_theta(double t, double theta0, double inertia, double max_torque) {
  if (!(theta0 > 0.0)) throw std::domain_error("theta0 must be positive");
  return theta0 * std::cosh(std::sqrt(max_torque / inertia) * t);
}

QuarterTurnTime quarter_turn_time(double theta0, double inertia, double max_torque) {
  if (!(theta0 > 0.0)) throw std::domain_error("theta0 must be positive");
  if (theta0 >= pi / 2) return {0.0, 0.0};
  const double scale = std::sqrt(inertia / max_torque);
  return {scale * std::acosh(pi / (2.0 * theta0)), scale * std::log(pi / theta0)};
}

double omega_at_quarter_turn(double inertia, double max_torque) {
  if (!(inertia > 0.0) || !(max_torque > 0.0)) throw std::domain_error("inertia and torque must be positive");
  return pi / 2 * std::sqrt(max_torque / inertia);
}

double omega_at_quarter_turn_exact(double theta0, double inertia, double max_torque) {
  if (!(inertia > 0.0) || !(max_torque >= 0.0)) throw std::domain_error("invalid inertia or torque");
  if (!(theta0 > 0.0) || theta0 > pi / 2) throw std::domain_error("theta0 must lie in (0, pi/2]");
  return std::sqrt(2.0 * max_torque * std::cos(theta0) / inertia);
}

std::optional<QuarterTurnCrossing> find_quarter_turn(const SpinUpTrajectory& traj) {
  const auto& s = traj.samples;
  if (s.empty()) return std::nullopt;
  if (s.front().theta >= pi / 2) return QuarterTurnCrossing{s.front().t, s.front().omega};
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].theta >= pi / 2) {
      const double f = (pi / 2 - s[i - 1].theta) / (s[i].theta - s[i - 1].theta);
      return QuarterTurnCrossing{s[i - 1].t + f * (s[i].t - s[i - 1].t),
                                 s[i - 1].omega + f * (s[i].omega - s[i - 1].omega)};
    }
  }
  return std::nullopt;
}

double fit_t0(SpinUpTrajectory& traj) {
  const auto& s = traj.samples;
  if (s.size() < 3) throw FitFailure("trajectory too short to fit t0");
  const auto& p = traj.problem;
  if (!(p.max_torque > 0.0)) throw FitFailure("no torque, no ramp to fit");

  // Require a linear tail: max omega must exceed 3x omega at the 25% time mark.
  const double t_mark = s.front().t + 0.25 * (s.back().t - s.front().t);
  const auto it = std::lower_bound(s.begin(), s.end(), t_mark,
                                   [](const SpinUpSample& a, double t) { return a.t < t; });
  double omega_mark = it->omega;
  if (it != s.begin() && it->t > t_mark) {
    const auto& lo = *(it - 1);
    omega_mark = lo.omega + (t_mark - lo.t) / (it->t - lo.t) * (it->omega - lo.omega);
  }
  double omega_peak = 0.0;
  for (const auto& x : s) omega_peak = std::max(omega_peak, x.omega);
  if (!(omega_peak > 3.0 * omega_mark)) {
    throw FitFailure(fmt::format("no linear tail: peak omega {:.4g} is not above 3x omega({:.4g} s) = {:.4g}",
                                 omega_peak, t_mark, omega_mark));
  }

  const auto first = std::find_if(s.begin(), s.end(), [](const SpinUpSample& x) { return x.theta > pi / 2; });
  const auto n = static_cast<std::size_t>(s.end() - first);
  if (n < 2) throw FitFailure("fewer than two samples past the quarter turn");

  // Minimise sum_i (omega_i - slope max(0, t_i - t0))^2 exactly: on each
  // interval between sample times the active set is fixed and the objective
  // is quadratic in t0.
  const double slope = 2.0 / pi * p.max_torque / p.inertia;
  std::vector<double> t(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = first[i].t;
    w[i] = first[i].omega;
  }
  // suffix sums of a_i = omega_i - slope t_i and a_i^2; prefix sums of omega^2
  std::vector<double> sa(n + 1, 0.0), saa(n + 1, 0.0), pww(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    const double a = w[i] - slope * t[i];
    sa[i] = sa[i + 1] + a;
    saa[i] = saa[i + 1] + a * a;
  }
  for (std::size_t i = 0; i < n; ++i) pww[i + 1] = pww[i] + w[i] * w[i];

  double best_t0 = 0.0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    // t0 in (t_{j-1}, t_j]: samples j..n-1 active
    const auto active = static_cast<double>(n - j);
    double t0 = sa[j] / active / -slope;
    if (t0 > t[j]) t0 = t[j];
    if (j > 0 && t0 < t[j - 1]) t0 = t[j - 1];
    const double cost = saa[j] + 2.0 * slope * t0 * sa[j] + active * slope * slope * t0 * t0 + pww[j];
    if (cost < best_cost) {
      best_cost = cost;
      best_t0 = t0;
    }
  }
  traj.t0_fit = best_t0;
  return best_t0;
}

void write_trajectory_csv(std::ostream& out, const SpinUpTrajectory& traj) {
  out << "t,theta,omega\n";
  for (const auto& s : traj.samples) out << fmt::format("{:.17g},{:.17g},{:.17g}\n", s.t, s.theta, s.omega);
}

}  // namespace gravrotor
