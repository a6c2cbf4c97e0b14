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

#include "gravrotor/phase_gate.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gravrotor {

namespace {

void check_interval(double T, double r) {
  if (!(r > 0.0)) throw std::domain_error("separation r must be positive");
  if (!(T >= 0.0)) throw std::domain_error("evolution time T must be non-negative");
}

}  // namespace

double TwoQubitPhaseState::phase(int a, int b) const {
  const int index = 2 * a + b;
  switch (index) {
    case 0: return global_;
    case 1: return global_ + rel01_;
    case 2: return global_ + rel10_;
    case 3: return global_ + rel11_;
    default: throw std::domain_error("qubit labels must be 0 or 1");
  }
}

std::array<std::complex<double>, 4> TwoQubitPhaseState::amplitudes() const {
  std::array<std::complex<double>, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = 0.5 * std::polar(1.0, phase(i / 2, i % 2));
  return out;
}

double TwoQubitPhaseState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes()) sum += std::norm(a);
  return std::sqrt(sum);
}

TwoQubitPhaseState TwoQubitPhaseState::with_global_shift(double alpha) const {
  return {global_ + alpha, rel01_, rel10_, rel11_};
}

TwoQubitPhaseState TwoQubitPhaseState::with_local_shift(int qubit, double alpha) const {
  if (qubit == 0) return {global_, rel01_, rel10_ + alpha, rel11_ + alpha};
  if (qubit == 1) return {global_, rel01_ + alpha, rel10_, rel11_ + alpha};
  throw std::domain_error("qubit index must be 0 or 1");
}

TwoQubitPhaseState branch_phases(const MassSuperposition& ms, double T, double r,
                                 const PhysicalConstants& k) {
  check_interval(T, r);
  const double coupling = k.G * T / (k.hbar * r);
  const double M = ms.base_mass;
  const double dM = ms.mass_difference;
  // phi_01 - phi_00 = coupling M dM, phi_11 - phi_00 = coupling (2 M dM + dM^2)
  const double cross = coupling * M * dM;
  return {coupling * M * M, cross, cross, coupling * (2.0 * M * dM + dM * dM)};
}

double entangling_phase_from_mass(double dM, double T, double r, const PhysicalConstants& k) {
  check_interval(T, r);
  return k.G * dM * dM * T / (k.hbar * r);
}

double entangling_phase_from_energy(double E, double T, double r, const PhysicalConstants& k) {
  check_interval(T, r);
  const double c2 = k.c * k.c;
  return k.G * E * E * T / (k.hbar * c2 * c2 * r);
}

double rotational_energy(double inertia, double omega) {
  if (!(inertia >= 0.0)) throw std::domain_error("moment of inertia must be non-negative");
  return 0.5 * inertia * omega * omega;
}

double mass_equivalent(double energy, const PhysicalConstants& k) {
  if (!(energy >= 0.0)) throw std::domain_error("energy must be non-negative");
  return energy / (k.c * k.c);
}

TwoQubitPhaseState final_state(double phi) { return {0.0, 0.0, 0.0, phi}; }

double concurrence(double phi) {
  const double wrapped = std::remainder(phi, std::numbers::pi);
  return std::abs(std::sin(2.0 * wrapped));
}

double repetitions_required(double phi) {
  if (phi == 0.0) throw std::domain_error("repetition count diverges for zero phase");
  const double x = 1.0 / (phi * phi);
  if (!std::isfinite(x)) return std::numeric_limits<double>::infinity();
  // Absorb last-bit noise so exact powers of ten stay exact.
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 8.0 * std::numeric_limits<double>::epsilon() * x) return nearest;
  return std::ceil(x);
}

}  // namespace gravrotor
