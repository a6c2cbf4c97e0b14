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

#include <nlohmann/json.hpp>

#include "gravrotor/geometry.hpp"
#include "gravrotor/units.hpp"

namespace gravrotor {

struct RadiationBudget {
  double power;             // W
  double photon_rate;       // s^-1
  double expected_photons;  // over ramp-up, hold and ramp-down

  /// <n> < 1, strictly.
  bool emission_free() const { return expected_photons < 1.0; }
};

/// Phase accumulated over a trapezoidal omega(t): linear ramps of length T3
/// up and down around a hold of length T4.
/// (G / 4 hbar c^4)(I^2 omega^4 / r)(2 T3 / 5 + T4).
double protocol_phase(double inertia, double omega_max, double r, double T3, double T4,
                      const PhysicalConstants& k = kCodata2018);

/// Angular velocity at which the rim speed reaches the speed of sound.
double centrifugal_limit(double radius, double sound_speed);

/// Orientation angle prepared by the electric torque: min(p E T2^2 / 2I, pi/4).
double superposition_angle(double inertia, const ProtocolParams& params);

RadiationBudget radiation_budget(double omega_max, double moment, double T3, double T4,
                                 const PhysicalConstants& k = kCodata2018);

/// Largest moment whose radiated photon count stays at one over steps 3-5.
double photon_limited_moment(double omega_max, double T3, double T4,
                             const PhysicalConstants& k = kCodata2018);

/// min(remanent_moment, photon_limited_moment).
double moment_budget(const RotorGeometry& geom, double omega_max, double T3, double T4,
                     const PhysicalConstants& k = kCodata2018);

struct SpinUpEstimate {
  double omega;   // reachable angular velocity by the end of step 3
  double t0;      // dead time before the linear ramp starts
  double moment;  // chosen magnetic moment
  double torque;  // m B
  double theta0;  // prepared orientation angle
};

/// Angular velocity reachable in T3 with the delayed linear ramp
/// (2/pi)(tau/I)(T3 - t0), clamped at zero.
SpinUpEstimate achievable_omega(const RotorGeometry& geom, const ProtocolParams& params,
                                double omega_target, const PhysicalConstants& k = kCodata2018);

struct ConstraintReport {
  double phi = 0.0;
  bool phi_ok = false;
  bool centrifugal_ok = false;
  bool spin_up_ok = false;
  double margin_phi = 0.0;          // log10(phi / phi_min)
  double margin_centrifugal = 0.0;  // log10(v_s / (omega R))
  double margin_spinup = 0.0;       // log10(T3 / time needed to reach omega / relax)
  double m = 0.0;
  double theta0 = 0.0;
  double t0 = 0.0;
  double omega_achievable = 0.0;

  bool all_ok() const { return phi_ok && centrifugal_ok && spin_up_ok; }
};

/// All three limitations at one (geometry, omega_max) point. `relax` divides
/// the spin-up requirement: the check becomes omega_achievable >= omega/relax.
ConstraintReport evaluate_point(const RotorGeometry& geom, double omega_max, const ProtocolParams& params,
                                double relax = 1.0, const PhysicalConstants& k = kCodata2018);

nlohmann::json to_json(const ConstraintReport& report);

}  // namespace gravrotor
