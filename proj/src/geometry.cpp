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

#include "gravrotor/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gravrotor {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || std::isnan(value)) {
    throw std::domain_error(std::string(what) + " must be positive");
  }
}

void require_positive_finite(double value, const char* what) {
  require_positive(value, what);
  if (!std::isfinite(value)) throw std::domain_error(std::string(what) + " must be finite");
}

}  // namespace

void Material::validate() const {
  require_positive_finite(density, "density");
  require_positive_finite(remanence, "remanence");
  require_positive_finite(sound_speed, "sound_speed");
}

std::string_view to_string(Shape shape) { return shape == Shape::sphere ? "sphere" : "disc"; }

Shape parse_shape(std::string_view text) {
  if (text == "sphere") return Shape::sphere;
  if (text == "disc") return Shape::disc;
  throw std::domain_error("unknown shape '" + std::string(text) + "' (expected sphere or disc)");
}

RotorGeometry::RotorGeometry(std::variant<Sphere, Disc> body, const Material& material)
    : body_(body), material_(material) {
  material_.validate();
}

RotorGeometry RotorGeometry::sphere(double radius, const Material& material) {
  require_positive_finite(radius, "radius");
  return RotorGeometry(Sphere{radius}, material);
}

RotorGeometry RotorGeometry::disc(double radius, const Material& material) {
  return disc(radius, radius * kDefaultDiscAspect, material);
}

RotorGeometry RotorGeometry::disc(double radius, double height, const Material& material) {
  require_positive_finite(radius, "radius");
  require_positive_finite(height, "disc height");
  return RotorGeometry(Disc{radius, height}, material);
}

double RotorGeometry::radius() const {
  return std::visit([](const auto& b) { return b.radius; }, body_);
}

double volume_of(const RotorGeometry& geom) {
  using std::numbers::pi;
  if (const auto* s = std::get_if<Sphere>(&geom.body())) {
    return 4.0 / 3.0 * pi * s->radius * s->radius * s->radius;
  }
  const auto& d = std::get<Disc>(geom.body());
  return pi * d.radius * d.radius * d.height;
}

double mass_of(const RotorGeometry& geom) { return geom.material().density * volume_of(geom); }

double moment_of_inertia(const RotorGeometry& geom) {
  const double R = geom.radius();
  const double factor = geom.shape() == Shape::sphere ? 0.4 : 0.5;
  return factor * mass_of(geom) * R * R;
}

double center_separation(const RotorGeometry& geom, double r_min) {
  require_positive(r_min, "r_min");
  if (const auto* s = std::get_if<Sphere>(&geom.body())) return 2.0 * s->radius + r_min;
  return std::get<Disc>(geom.body()).height + r_min;
}

double remanent_moment(const RotorGeometry& geom, const PhysicalConstants& k) {
  return geom.material().remanence * volume_of(geom) / k.mu0;
}

void ProtocolParams::validate() const {
  require_positive_finite(T2, "T2");
  require_positive_finite(T3, "T3");
  require_positive_finite(T4, "T4");
  require_positive_finite(dipole, "dipole");
  require_positive_finite(e_field, "E_field");
  require_positive_finite(b_field, "B_field");
  require_positive_finite(r_min, "r_min");
  // An infinite threshold is allowed: it switches the phase constraint off.
  require_positive(phi_min, "phi_min");
}

}  // namespace gravrotor
