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

#include "gravrotor/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gravrotor/phase_gate.hpp"
#include "gravrotor/rotor_dynamics.hpp"

namespace gravrotor {

namespace {

using std::numbers::pi;

double emission_constant(const PhysicalConstants& k) {
  const double c5 = k.c * k.c * k.c * k.c * k.c;
  return 6.0 * pi * k.eps0 * c5;
}

}  // namespace

double protocol_phase(double inertia, double omega_max, double r, double T3, double T4,
                      const PhysicalConstants& k) {
  if (!(r > 0.0)) throw std::domain_error("separation r must be positive");
  const double c2 = k.c * k.c;
  const double w2 = omega_max * omega_max;
  return k.G / (4.0 * k.hbar * c2 * c2) * (inertia * inertia * w2 * w2 / r) * (0.4 * T3 + T4);
}

double centrifugal_limit(double radius, double sound_speed) {
  if (!(radius > 0.0)) throw std::domain_error("radius must be positive");
  return sound_speed / radius;
}

double superposition_angle(double inertia, const ProtocolParams& params) {
  if (!(inertia > 0.0)) throw std::domain_error("inertia must be positive");
  const double angle = params.dipole * params.e_field * params.T2 * params.T2 / (2.0 * inertia);
  return std::min(angle, pi / 4);
}

RadiationBudget radiation_budget(double omega_max, double moment, double T3, double T4,
                                 const PhysicalConstants& k) {
  if (!(omega_max >= 0.0) || !(moment >= 0.0) || !(T3 >= 0.0) || !(T4 >= 0.0)) {
    throw std::domain_error("radiation budget inputs must be non-negative");
  }
  const double denom = emission_constant(k);
  const double w3 = omega_max * omega_max * omega_max;
  const double m2 = moment * moment;
  const double rate = w3 * m2 / (denom * k.hbar);
  return {omega_max * w3 * m2 / denom, rate, rate * (T3 / 3.0 + T4)};
}

double photon_limited_moment(double omega_max, double T3, double T4, const PhysicalConstants& k) {
  if (!(omega_max > 0.0)) throw std::domain_error("omega_max must be positive");
  const double window = T3 / 3.0 + T4;
  if (window <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(emission_constant(k) * k.hbar / (omega_max * omega_max * omega_max * window));
}

double moment_budget(const RotorGeometry& geom, double omega_max, double T3, double T4,
                     const PhysicalConstants& k) {
  return std::min(remanent_moment(geom, k), photon_limited_moment(omega_max, T3, T4, k));
}

SpinUpEstimate achievable_omega(const RotorGeometry& geom, const ProtocolParams& params, double omega_target,
                                const PhysicalConstants& k) {
  const double inertia = moment_of_inertia(geom);
  const double m = moment_budget(geom, omega_target, params.T3, params.T4, k);
  const double torque = m * params.b_field;
  const double theta0 = superposition_angle(inertia, params);
  if (!(theta0 > 0.0)) return {0.0, std::numeric_limits<double>::infinity(), m, torque, theta0};
  const double t0 = t0_empirical(inertia, torque, theta0);
  const double omega = std::max(0.0, 2.0 / pi * (torque / inertia) * (params.T3 - t0));
  return {omega, t0, m, torque, theta0};
}

ConstraintReport evaluate_point(const RotorGeometry& geom, double omega_max, const ProtocolParams& params,
                                double relax, const PhysicalConstants& k) {
  params.validate();
  if (!(omega_max > 0.0) || !std::isfinite(omega_max)) throw std::domain_error("omega_max must be positive");
  if (!(relax >= 1.0)) throw std::domain_error("relaxation factor must be at least 1");

  ConstraintReport rep;
  const double inertia = moment_of_inertia(geom);
  const double r = center_separation(geom, params.r_min);

  rep.phi = protocol_phase(inertia, omega_max, r, params.T3, params.T4, k);
  rep.margin_phi = std::log10(rep.phi / params.phi_min);
  rep.phi_ok = rep.phi > params.phi_min;

  const double R = geom.radius();
  const double vs = geom.material().sound_speed;
  rep.margin_centrifugal = std::log10(vs / (omega_max * R));
  rep.centrifugal_ok = omega_max * R < vs;

  const SpinUpEstimate est = achievable_omega(geom, params, omega_max, k);
  rep.m = est.moment;
  rep.theta0 = est.theta0;
  rep.t0 = est.t0;
  rep.omega_achievable = est.omega;
  // Time to reach omega_max / relax on the delayed ramp; the margin compares it
  // with T3 so it stays finite and continuous where omega_achievable clamps.
  const double required = omega_max / relax;
  const double ramp_rate = 2.0 / pi * est.torque / inertia;
  const double needed = est.t0 + required / ramp_rate;
  rep.margin_spinup = std::log10(params.T3 / needed);
  rep.spin_up_ok = est.omega >= required && est.t0 < params.T3;
  return rep;
}

nlohmann::json to_json(const ConstraintReport& r) {
  return nlohmann::json{{"phi", r.phi},
                        {"phi_ok", r.phi_ok},
                        {"centrifugal_ok", r.centrifugal_ok},
                        {"spin_up_ok", r.spin_up_ok},
                        {"margin_phi", r.margin_phi},
                        {"margin_centrifugal", r.margin_centrifugal},
                        {"margin_spinup", r.margin_spinup},
                        {"m", r.m},
                        {"theta0", r.theta0},
                        {"t0", r.t0},
                        {"omega_achievable", r.omega_achievable}};
}

}  // namespace gravrotor
