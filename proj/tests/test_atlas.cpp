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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gravrotor/atlas.hpp"

using namespace gravrotor;

namespace {

SweepSpec small_spec(std::size_t n) {
  SweepSpec s;
  s.radius.count = n;
  s.omega.count = n;
  return s;
}

std::size_t count(const Mask& m) {
  std::size_t n = 0;
  for (auto v : m.data()) n += v;
  return n;
}

}  // namespace

TEST_CASE("log axis") {
  const LogAxis a{1e-3, 1.0, 4};
  const auto n = a.nodes();
  REQUIRE(n.size() == 4);
  CHECK(n.front() == 1e-3);
  CHECK(n.back() == 1.0);
  CHECK(n[1] == doctest::Approx(1e-2).epsilon(1e-14));
  CHECK(n[2] == doctest::Approx(1e-1).epsilon(1e-14));
  CHECK_THROWS_AS((LogAxis{1.0, 1.0, 4}.validate("x")), std::domain_error);
  CHECK_THROWS_AS((LogAxis{0.0, 1.0, 4}.validate("x")), std::domain_error);
  CHECK_THROWS_AS((LogAxis{1.0, 2.0, 1}.validate("x")), std::domain_error);
}

TEST_CASE("sweep is deterministic across thread counts") {
  const auto spec = small_spec(48);
  const auto one = sweep(spec, 1);
  CHECK(sweep(spec, 4) == one);
  CHECK(sweep(spec, 8) == one);
  CHECK(sweep(spec, 0) == one);
  CHECK(one.invalid_cells == 0);
}

TEST_CASE("2x2 grid matches pointwise evaluation") {
  for (Shape shape : {Shape::sphere, Shape::disc}) {
    auto spec = small_spec(2);
    spec.shape = shape;
    const auto g = sweep(spec, 2);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const auto rep = evaluate_point(spec.geometry_at(g.radii[i]), g.omegas[j], spec.params, spec.relax);
        CHECK(g.phi(i, j) == rep.phi);
        CHECK(g.margin_spinup(i, j) == rep.margin_spinup);
        CHECK(bool(g.phase_ok(i, j)) == rep.phi_ok);
        CHECK(bool(g.centrifugal_ok(i, j)) == rep.centrifugal_ok);
        CHECK(bool(g.spin_up_ok(i, j)) == rep.spin_up_ok);
        CHECK(bool(g.overlap(i, j)) == rep.all_ok());
      }
    }
  }
}

TEST_CASE("masks are monotone where the physics says so") {
  const auto g = sweep(small_spec(64));
  for (std::size_t i = 0; i < g.radii.size(); ++i) {
    for (std::size_t j = 0; j < g.omegas.size(); ++j) {
      if (i + 1 < g.radii.size()) {
        CHECK(g.phase_ok(i + 1, j) >= g.phase_ok(i, j));
        CHECK(g.centrifugal_ok(i + 1, j) <= g.centrifugal_ok(i, j));
      }
      if (j + 1 < g.omegas.size()) {
        CHECK(g.phase_ok(i, j + 1) >= g.phase_ok(i, j));
        CHECK(g.centrifugal_ok(i, j + 1) <= g.centrifugal_ok(i, j));
      }
      CHECK(g.overlap(i, j) == (g.phase_ok(i, j) && g.centrifugal_ok(i, j) && g.spin_up_ok(i, j)));
    }
  }
}

TEST_CASE("relaxing the spin-up target only adds cells") {
  auto spec = small_spec(40);
  const auto strict = sweep(spec);
  spec.relax = 10.0;
  const auto loose = sweep(spec);
  for (std::size_t k = 0; k < strict.spin_up_ok.data().size(); ++k) {
    CHECK(loose.spin_up_ok.data()[k] >= strict.spin_up_ok.data()[k]);
  }
  CHECK(count(loose.spin_up_ok) > count(strict.spin_up_ok));
}

TEST_CASE("refined grid agrees on shared nodes") {
  const auto coarse = sweep(small_spec(17));
  const auto fine = sweep(small_spec(33));
  for (std::size_t i = 0; i < 17; ++i) {
    for (std::size_t j = 0; j < 17; ++j) {
      const std::size_t fi = 2 * i, fj = 2 * j;
      CHECK(fine.radii[fi] == doctest::Approx(coarse.radii[i]).epsilon(1e-14));
      CHECK(fine.phi(fi, fj) == doctest::Approx(coarse.phi(i, j)).epsilon(1e-12));
      if (std::abs(coarse.margin_phi(i, j)) > 1e-9) CHECK(fine.phase_ok(fi, fj) == coarse.phase_ok(i, j));
      if (std::abs(coarse.margin_spinup(i, j)) > 1e-9) CHECK(fine.spin_up_ok(fi, fj) == coarse.spin_up_ok(i, j));
    }
  }
}

TEST_CASE("overlap statistics") {
  SUBCASE("unreachable phase threshold empties the overlap") {
    auto spec = small_spec(24);
    spec.params.phi_min = std::numeric_limits<double>::infinity();
    const auto g = sweep(spec);
    CHECK(count(g.phase_ok) == 0);
    const auto st = overlap_stats(g);
    CHECK(st.cell_count == 0);
    CHECK_FALSE(st.bounding_box.has_value());
    CHECK_FALSE(st.best_point.has_value());
    const auto j = to_json(st);
    CHECK(j["cell_count"] == 0);
    CHECK_FALSE(j.contains("bounding_box"));
  }
  SUBCASE("box and best point cover the overlap cells") {
    auto spec = small_spec(64);
    spec.relax = 10.0;
    const auto g = sweep(spec);
    const auto st = overlap_stats(g);
    CHECK(st.cell_count == count(g.overlap));
    REQUIRE(st.cell_count > 0);
    const auto& b = *st.bounding_box;
    double best = -1.0;
    for (std::size_t i = 0; i < g.radii.size(); ++i) {
      for (std::size_t j = 0; j < g.omegas.size(); ++j) {
        if (!g.overlap(i, j)) continue;
        CHECK(g.radii[i] >= b.radius_min);
        CHECK(g.radii[i] <= b.radius_max);
        CHECK(g.omegas[j] >= b.omega_min);
        CHECK(g.omegas[j] <= b.omega_max);
        best = std::max(best, g.phi(i, j));
      }
    }
    CHECK(st.best_point->phi == best);
    CHECK(st.best_point->phi > spec.params.phi_min);
  }
}

TEST_CASE("geometry comparison") {
  auto sphere = small_spec(32);
  sphere.relax = 10.0;
  auto disc = sphere;
  disc.shape = Shape::disc;

  const auto same = compare_geometries(sphere, sphere, 2);
  REQUIRE(same.ratio.has_value());
  CHECK(*same.ratio == 1.0);
  CHECK(same.sphere_cells == same.disc_cells);

  const auto cmp = compare_geometries(sphere, disc, 2);
  CHECK(cmp.sphere_cells == overlap_stats(sweep(sphere)).cell_count);
  CHECK(cmp.disc_cells == overlap_stats(sweep(disc)).cell_count);
  const auto j = to_json(cmp);
  CHECK(j.contains("ratio"));

  auto other = disc;
  other.omega.count = 31;
  CHECK_THROWS_AS(compare_geometries(sphere, other), std::domain_error);
  other = disc;
  other.params.T3 = 2e3;
  CHECK_THROWS_AS(compare_geometries(sphere, other), std::domain_error);

  auto none = sphere;
  none.params.phi_min = std::numeric_limits<double>::infinity();
  auto none_disc = none;
  none_disc.shape = Shape::disc;
  const auto empty = compare_geometries(none, none_disc);
  CHECK_FALSE(empty.ratio.has_value());
  CHECK(to_json(empty)["ratio"].is_null());
}

TEST_CASE("grid CSV") {
  const auto g = sweep(small_spec(3));
  std::ostringstream out;
  write_grid_csv(out, g);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "R,omega,phi,margin_phi,margin_centrifugal,margin_spinup,phase_ok,centrifugal_ok,spinup_ok,overlap");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 9);
}

TEST_CASE("sweep rejects bad specs") {
  auto spec = small_spec(4);
  spec.relax = 0.5;
  CHECK_THROWS_AS(sweep(spec), std::domain_error);
  spec = small_spec(4);
  spec.disc_aspect = 0.0;
  CHECK_THROWS_AS(sweep(spec), std::domain_error);
}
