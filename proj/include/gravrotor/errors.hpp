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

#include <stdexcept>
#include <string>

namespace gravrotor {

/// Raised when an integrator or sweep cannot meet its accuracy contract.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by fit_t0 when the trajectory has no usable linear tail.
class FitFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

// Invalid arguments use std::domain_error throughout.

}  // namespace gravrotor
