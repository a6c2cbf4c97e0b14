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

#include <string>

#include "gravrotor/atlas.hpp"
#include "gravrotor/rotor_dynamics.hpp"

namespace gravrotor {

/// Log-log map of the three constraint regions and their overlap.
/// Output depends only on the grid (no timestamps), so it is byte-stable.
std::string render_regions_svg(const FeasibilityGrid& grid);

/// theta(t) and omega(t) panels; the fitted ramp is overlaid when t0_fit is set.
std::string render_trajectory_svg(const SpinUpTrajectory& traj);

}  // namespace gravrotor
