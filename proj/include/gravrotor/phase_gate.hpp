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

#include <array>
#include <complex>

#include "gravrotor/units.hpp"

namespace gravrotor {

/// Equal superposition of a rotor with mass M (|0>) and M + dM (|1>).
struct MassSuperposition {
  double base_mass;        // kg
  double mass_difference;  // kg, any sign
};

/// Two-qubit state 1/2 sum_ab exp(i phi_ab) |ab> with unit-modulus amplitudes.
///
/// Phases are held as a global phase (phi_00) plus the three phases relative
/// to it. The entangling combination is then computed from the relative
/// phases only, which keeps it accurate when M >> dM and phi_00 is huge.
/// Phases are unwrapped.
class TwoQubitPhaseState {
 public:
  TwoQubitPhaseState() = default;
  TwoQubitPhaseState(double global, double rel01, double rel10, double rel11)
      : global_(global), rel01_(rel01), rel10_(rel10), rel11_(rel11) {}

  /// phi_ab for a, b in {0, 1}.
  double phase(int a, int b) const;
  double global_phase() const { return global_; }

  /// phi_00 + phi_11 - phi_01 - phi_10.
  double entangling_phase() const { return rel11_ - rel01_ - rel10_; }

  /// Amplitudes in the order |00>, |01>, |10>, |11>.
  std::array<std::complex<double>, 4> amplitudes() const;
  double norm() const;

  TwoQubitPhaseState with_global_shift(double alpha) const;
  /// Adds alpha to every branch where `qubit` (0 or 1) is in |1>.
  TwoQubitPhaseState with_local_shift(int qubit, double alpha) const;

 private:
  double global_ = 0.0;
  double rel01_ = 0.0;
  double rel10_ = 0.0;
  double rel11_ = 0.0;
};

/// Branch phases after time T at fixed separation r under H = -G M1 M2 / r.
TwoQubitPhaseState branch_phases(const MassSuperposition& ms, double T, double r,
                                 const PhysicalConstants& k = kCodata2018);

/// G dM^2 T / (hbar r).
double entangling_phase_from_mass(double dM, double T, double r,
                                  const PhysicalConstants& k = kCodata2018);

/// G E^2 T / (hbar c^4 r).
double entangling_phase_from_energy(double E, double T, double r,
                                    const PhysicalConstants& k = kCodata2018);

double rotational_energy(double inertia, double omega);

double mass_equivalent(double energy, const PhysicalConstants& k = kCodata2018);

/// Canonical form 1/2 (|00> + |01> + |10> + e^{i phi}|11>).
TwoQubitPhaseState final_state(double phi);

/// |sin 2 phi|, with phi wrapped before evaluation.
double concurrence(double phi);

/// ceil(1 / phi^2). Throws std::domain_error for phi == 0.
double repetitions_required(double phi);

}  // namespace gravrotor
