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

#include "gravrotor/atlas.hpp"

#include <fmt/format.h>

#include <atomic>
#include <cmath>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "gravrotor/errors.hpp"

namespace gravrotor {

std::vector<double> LogAxis::nodes() const {
  std::vector<double> out(count);
  const double lo = std::log(min);
  const double step = (std::log(max) - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = std::exp(lo + step * static_cast<double>(i));
  // pin the end points exactly
  out.front() = min;
  out.back() = max;
  return out;
}

void LogAxis::validate(const char* name) const {
  if (!(min > 0.0) || !(max > min) || !std::isfinite(max)) {
    throw std::domain_error(std::string(name) + " range must satisfy 0 < min < max");
  }
  if (count < 2) throw std::domain_error(std::string(name) + " needs at least two nodes");
}

void SweepSpec::validate() const {
  radius.validate("radius");
  omega.validate("omega");
  params.validate();
  material.validate();
  if (!(disc_aspect > 0.0) || !std::isfinite(disc_aspect)) throw std::domain_error("disc_aspect must be positive");
  if (!(relax >= 1.0) || !std::isfinite(relax)) throw std::domain_error("relax must be a finite factor >= 1");
}

RotorGeometry SweepSpec::geometry_at(double R) const {
  if (shape == Shape::sphere) return RotorGeometry::sphere(R, material);
  return RotorGeometry::disc(R, R * disc_aspect, material);
}

bool FeasibilityGrid::operator==(const FeasibilityGrid& o) const {
  // NaN-free by construction for valid cells; compare bitwise-equal values.
  return radii == o.radii && omegas == o.omegas && phi == o.phi && margin_phi == o.margin_phi &&
         margin_centrifugal == o.margin_centrifugal && margin_spinup == o.margin_spinup &&
         phase_ok == o.phase_ok && centrifugal_ok == o.centrifugal_ok && spin_up_ok == o.spin_up_ok &&
         overlap == o.overlap && valid == o.valid && invalid_cells == o.invalid_cells;
}

FeasibilityGrid sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  FeasibilityGrid g;
  g.spec = spec;
  g.radii = spec.radius.nodes();
  g.omegas = spec.omega.nodes();
  const std::size_t nr = g.radii.size();
  const std::size_t nw = g.omegas.size();
  g.phi = GridField<double>(nr, nw);
  g.margin_phi = GridField<double>(nr, nw);
  g.margin_centrifugal = GridField<double>(nr, nw);
  g.margin_spinup = GridField<double>(nr, nw);
  g.phase_ok = Mask(nr, nw);
  g.centrifugal_ok = Mask(nr, nw);
  g.spin_up_ok = Mask(nr, nw);
  g.overlap = Mask(nr, nw);
  g.valid = Mask(nr, nw);

  // Each row is claimed by exactly one worker; every cell is written once.
  std::atomic<std::size_t> next_row{0};
  const auto worker = [&] {
    for (std::size_t i = next_row++; i < nr; i = next_row++) {
      const RotorGeometry geom = spec.geometry_at(g.radii[i]);
      for (std::size_t j = 0; j < nw; ++j) {
        try {
          const ConstraintReport rep = evaluate_point(geom, g.omegas[j], spec.params, spec.relax);
          if (std::isnan(rep.phi) || std::isnan(rep.margin_spinup)) continue;
          g.phi(i, j) = rep.phi;
          g.margin_phi(i, j) = rep.margin_phi;
          g.margin_centrifugal(i, j) = rep.margin_centrifugal;
          g.margin_spinup(i, j) = rep.margin_spinup;
          g.phase_ok(i, j) = rep.phi_ok;
          g.centrifugal_ok(i, j) = rep.centrifugal_ok;
          g.spin_up_ok(i, j) = rep.spin_up_ok;
          g.overlap(i, j) = rep.all_ok();
          g.valid(i, j) = 1;
        } catch (const std::exception&) {
          // left invalid; counted below
        }
      }
    }
  };

  unsigned n_threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, nr));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }

  for (auto v : g.valid.data()) g.invalid_cells += v ? 0 : 1;
  if (g.invalid_cells * 100 > nr * nw) {
    throw NumericalFailure(fmt::format("sweep failed: {} of {} cells could not be evaluated", g.invalid_cells, nr * nw));
  }
  return g;
}

OverlapStats overlap_stats(const FeasibilityGrid& grid) {
  OverlapStats stats;
  for (std::size_t i = 0; i < grid.radii.size(); ++i) {
    for (std::size_t j = 0; j < grid.omegas.size(); ++j) {
      if (!grid.overlap(i, j)) continue;
      ++stats.cell_count;
      const double R = grid.radii[i];
      const double w = grid.omegas[j];
      if (!stats.bounding_box) {
        stats.bounding_box = OverlapBox{R, R, w, w};
      } else {
        auto& b = *stats.bounding_box;
        b.radius_min = std::min(b.radius_min, R);
        b.radius_max = std::max(b.radius_max, R);
        b.omega_min = std::min(b.omega_min, w);
        b.omega_max = std::max(b.omega_max, w);
      }
      if (!stats.best_point || grid.phi(i, j) > stats.best_point->phi) {
        stats.best_point = OverlapPoint{R, w, grid.phi(i, j)};
      }
    }
  }
  return stats;
}

namespace {

void require_comparable(const SweepSpec& a, const SweepSpec& b) {
  if (!(a.radius == b.radius) || !(a.omega == b.omega)) {
    throw std::domain_error("geometry comparison needs identical sweep axes");
  }
  if (!(a.params == b.params) || !(a.material == b.material) || a.relax != b.relax) {
    throw std::domain_error("geometry comparison needs identical parameters, material and relaxation");
  }
}

}  // namespace

GeometryComparison compare_geometries(const FeasibilityGrid& sphere, const FeasibilityGrid& disc) {
  require_comparable(sphere.spec, disc.spec);
  GeometryComparison cmp;
  cmp.sphere_cells = overlap_stats(sphere).cell_count;
  cmp.disc_cells = overlap_stats(disc).cell_count;
  if (cmp.sphere_cells > 0) {
    cmp.ratio = static_cast<double>(cmp.disc_cells) / static_cast<double>(cmp.sphere_cells);
  }
  return cmp;
}

GeometryComparison compare_geometries(const SweepSpec& sphere, const SweepSpec& disc, unsigned threads) {
  require_comparable(sphere, disc);
  return compare_geometries(sweep(sphere, threads), sweep(disc, threads));
}

void write_grid_csv(std::ostream& out, const FeasibilityGrid& g) {
  out << "R,omega,phi,margin_phi,margin_centrifugal,margin_spinup,phase_ok,centrifugal_ok,spinup_ok,overlap\n";
  for (std::size_t i = 0; i < g.radii.size(); ++i) {
    for (std::size_t j = 0; j < g.omegas.size(); ++j) {
      out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:d},{:d},{:d},{:d}\n", g.radii[i],
                         g.omegas[j], g.phi(i, j), g.margin_phi(i, j), g.margin_centrifugal(i, j),
                         g.margin_spinup(i, j), g.phase_ok(i, j), g.centrifugal_ok(i, j), g.spin_up_ok(i, j),
                         g.overlap(i, j));
    }
  }
}

nlohmann::json to_json(const OverlapStats& s) {
  nlohmann::json j{{"cell_count", s.cell_count}};
  if (s.bounding_box) {
    const auto& b = *s.bounding_box;
    j["bounding_box"] = {{"R_min", b.radius_min}, {"R_max", b.radius_max}, {"omega_min", b.omega_min},
                         {"omega_max", b.omega_max}};
  }
  if (s.best_point) {
    const auto& p = *s.best_point;
    j["best_point"] = {{"R", p.radius}, {"omega", p.omega}, {"phi", p.phi}};
  }
  return j;
}

nlohmann::json to_json(const GeometryComparison& c) {
  nlohmann::json j{{"sphere_cells", c.sphere_cells}, {"disc_cells", c.disc_cells}};
  j["ratio"] = c.ratio ? nlohmann::json(*c.ratio) : nlohmann::json(nullptr);
  return j;
}

}  // namespace gravrotor
