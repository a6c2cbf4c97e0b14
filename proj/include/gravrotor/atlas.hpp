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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "gravrotor/constraints.hpp"
#include "gravrotor/geometry.hpp"

namespace gravrotor {

/// Log-spaced axis with `count` nodes from `min` to `max` inclusive.
struct LogAxis {
  double min;
  double max;
  std::size_t count;

  std::vector<double> nodes() const;
  void validate(const char* name) const;
  bool operator==(const LogAxis&) const = default;
};

struct SweepSpec {
  LogAxis radius{1e-3, 1.0, 128};
  LogAxis omega{1e-1, 1e3, 128};
  Shape shape = Shape::sphere;
  double disc_aspect = kDefaultDiscAspect;  // H / R for discs
  ProtocolParams params;
  Material material;
  double relax = 1.0;

  void validate() const;
  RotorGeometry geometry_at(double radius) const;
  bool operator==(const SweepSpec&) const = default;
};

/// Row-major (radius, omega) matrix.
template <typename T>
class GridField {
 public:
  GridField() = default;
  GridField(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<T>& data() const { return data_; }
  bool operator==(const GridField&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// std::uint8_t rather than bool so that workers can write neighbouring cells.
using Mask = GridField<std::uint8_t>;

struct FeasibilityGrid {
  SweepSpec spec;
  std::vector<double> radii;
  std::vector<double> omegas;
  GridField<double> phi;
  GridField<double> margin_phi;
  GridField<double> margin_centrifugal;
  GridField<double> margin_spinup;
  Mask phase_ok;
  Mask centrifugal_ok;
  Mask spin_up_ok;
  Mask overlap;
  Mask valid;
  std::size_t invalid_cells = 0;

  bool operator==(const FeasibilityGrid& o) const;
};

/// Evaluates every node; `threads == 0` uses the hardware concurrency.
/// Cells whose evaluation throws are marked invalid; more than 1% invalid
/// cells raises NumericalFailure.
FeasibilityGrid sweep(const SweepSpec& spec, unsigned threads = 0);

struct OverlapBox {
  double radius_min, radius_max;
  double omega_min, omega_max;
};

struct OverlapPoint {
  double radius;
  double omega;
  double phi;
};

struct OverlapStats {
  std::size_t cell_count = 0;
  std::optional<OverlapBox> bounding_box;
  std::optional<OverlapPoint> best_point;  // overlap cell with the largest phi
};

OverlapStats overlap_stats(const FeasibilityGrid& grid);

struct GeometryComparison {
  std::size_t sphere_cells = 0;  // first spec
  std::size_t disc_cells = 0;    // second spec
  std::optional<double> ratio;   // disc / sphere, absent when sphere_cells == 0
};

/// Sweeps both specs and compares overlap sizes. The specs must agree on
/// axes, parameters, material and relaxation (std::domain_error otherwise).
GeometryComparison compare_geometries(const SweepSpec& sphere, const SweepSpec& disc, unsigned threads = 0);
GeometryComparison compare_geometries(const FeasibilityGrid& sphere, const FeasibilityGrid& disc);

void write_grid_csv(std::ostream& out, const FeasibilityGrid& grid);
nlohmann::json to_json(const OverlapStats& stats);
nlohmann::json to_json(const GeometryComparison& cmp);

}  // namespace gravrotor
