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

#include <string_view>
#include <variant>

#include "gravrotor/units.hpp"

namespace gravrotor {

struct Material {
  double density = 2.3e4;      // kg m^-3
  double remanence = 1.4;      // remanent flux density B_r, T
  double sound_speed = 3.7e4;  // m s^-1

  void validate() const;
  bool operator==(const Material&) const = default;
};

enum class Shape { sphere, disc };

std::string_view to_string(Shape shape);
Shape parse_shape(std::string_view text);  // throws std::domain_error

struct Sphere {
  double radius;
};

/// Face-on disc rotating about its symmetry axis.
struct Disc {
  double radius;
  double height;
};

inline constexpr double kDefaultDiscAspect = 0.1;  // H / R

class RotorGeometry {
 public:
  static RotorGeometry sphere(double radius, const Material& material = {});
  static RotorGeometry disc(double radius, const Material& material = {});
  static RotorGeometry disc(double radius, double height, const Material& material);

  Shape shape() const { return std::holds_alternative<Sphere>(body_) ? Shape::sphere : Shape::disc; }
  const std::variant<Sphere, Disc>& body() const { return body_; }
  const Material& material() const { return material_; }
  double radius() const;

 private:
  RotorGeometry(std::variant<Sphere, Disc> body, const Material& material);

  std::variant<Sphere, Disc> body_;
  Material material_;
};

double volume_of(const RotorGeometry& geom);
double mass_of(const RotorGeometry& geom);

/// Sphere about a diameter, disc about its symmetry axis.
double moment_of_inertia(const RotorGeometry& geom);

/// Centre-to-centre distance used in the point-mass coupling: 2R + r_min for
/// spheres, H + r_min for face-to-face discs.
double center_separation(const RotorGeometry& geom, double r_min);

/// m = B_r V / mu0.
double remanent_moment(const RotorGeometry& geom, const PhysicalConstants& k = kCodata2018);

struct ProtocolParams {
  double T2 = 1e3;                       // s
  double T3 = 1e3;                       // s
  double T4 = 1e3;                       // s
  double dipole = 1e3 * (1e-21 / 299792458.0);  // C m (1000 D)
  double e_field = 1e10;                 // V m^-1
  double b_field = 100.0;                // T
  double r_min = 1e-5;                   // m
  double phi_min = 1e-3;                 // rad

  void validate() const;
  bool operator==(const ProtocolParams&) const = default;
};

}  // namespace gravrotor
