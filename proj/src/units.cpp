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

#include "gravrotor/units.hpp"

#include <cmath>
#include <stdexcept>

namespace gravrotor {

void PhysicalConstants::validate() const {
  for (double v : {G, hbar, c, eps0, mu0, debye}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::domain_error("physical constants must be positive and finite");
    }
  }
  if (std::abs(mu0 * eps0 * c * c - 1.0) > 1e-6) {
    throw std::domain_error("mu0 * eps0 * c^2 deviates from 1");
  }
}

double debye_to_coulomb_metre(double debye, const PhysicalConstants& k) { return debye * k.debye; }

double coulomb_metre_to_debye(double dipole, const PhysicalConstants& k) { return dipole / k.debye; }

}  // namespace gravrotor
