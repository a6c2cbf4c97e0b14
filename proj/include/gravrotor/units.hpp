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

namespace gravrotor {

/// Fundamental constants in SI units (CODATA 2018).
///
/// The struct is a plain value so that tests can scale individual constants
/// (e.g. send c to large values) without touching global state.
struct PhysicalConstants {
  double G = 6.67430e-11;          // m^3 kg^-1 s^-2
  double hbar = 1.054571817e-34;   // J s
  double c = 299792458.0;          // m s^-1, exact
  double eps0 = 8.8541878128e-12;  // F m^-1
  double mu0 = 1.25663706212e-6;   // H m^-1
  double debye = 1e-21 / 299792458.0;  // C m per debye

  /// Throws std::domain_error unless every field is positive and finite and
  /// mu0 * eps0 * c^2 == 1 to 1e-6 relative.
  void validate() const;

  PhysicalConstants with_speed_of_light(double new_c) const {
    PhysicalConstants k = *this;
    k.c = new_c;
    return k;
  }
};

inline constexpr PhysicalConstants kCodata2018{};

double debye_to_coulomb_metre(double debye, const PhysicalConstants& k = kCodata2018);
double coulomb_metre_to_debye(double dipole, const PhysicalConstants& k = kCodata2018);

}  // namespace gravrotor
