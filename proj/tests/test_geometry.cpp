/*
 * Copyright (C) 2026 The hyperholo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>

#include "doctest.h"

#include "hyperholo/geometry.hpp"

using namespace hyperholo;

namespace {

const StructuralSet& cim() { return StructuralSet::cimmino(); }

Quaternion normal_sum(const SurfaceQuadrature& s) {
  Quaternion acc;
  for (size_t i = 0; i < s.size(); ++i) acc += s.weights[i] * s.normals[i];
  return acc;
}

}  // namespace

TEST_CASE("sphere rule") {
  const Ball unit{{}, 1.0};
  const auto s = sphere_quadrature(unit, 24, 24, 48);
  CHECK(s.total_weight() == doctest::Approx(2 * M_PI * M_PI).epsilon(1e-12));
  double x0 = 0.0;
  for (size_t i = 0; i < s.size(); ++i) x0 += s.weights[i] * s.nodes[i].q0;
  CHECK(std::abs(x0) < 1e-10);
  CHECK(norm(normal_sum(s)) < 1e-10);
  for (size_t i = 0; i < s.size(); i += 97) {
    CHECK(norm(s.nodes[i]) == doctest::Approx(1.0));
    CHECK(max_abs_diff(s.normals[i], s.nodes[i]) < 1e-15);
  }
  const auto fine = sphere_quadrature(unit, 48, 48, 96);
  CHECK(fine.total_weight() == doctest::Approx(s.total_weight()).epsilon(1e-12));
  const Ball shifted{Quaternion{1, 2, 3, 4}, 2.0};
  CHECK(sphere_quadrature(shifted, 24, 24, 48).total_weight() ==
        doctest::Approx(16 * M_PI * M_PI).epsilon(1e-12));
}

TEST_CASE("box rule") {
  const Box unit{{0, 0, 0, 0}, {1, 1, 1, 1}};
  const auto s = box_quadrature(unit, 4);
  CHECK(s.total_weight() == doctest::Approx(8.0));
  CHECK(norm(normal_sum(s)) < 1e-13);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s.nodes[i].q0 == 1.0) CHECK(s.normals[i] == Quaternion(1.0));
    if (s.nodes[i].q0 == 0.0) CHECK(s.normals[i] == Quaternion(-1.0));
  }
}

TEST_CASE("volume rules") {
  const Resolution res;
  CHECK(volume_quadrature(Domain4::unit_ball(), res).total_weight() ==
        doctest::Approx(M_PI * M_PI / 2).epsilon(1e-12));
  CHECK(volume_quadrature(Domain4::unit_box(), res).total_weight() ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(Domain4::unit_ball().volume() == doctest::Approx(4.9348).epsilon(1e-5));
}

TEST_CASE("weighted measures") {
  const Resolution res;
  const auto vol = volume_quadrature(Domain4::unit_box(), res);
  const WeightedVolume w0 = weighted_measures(vol, {}, cim());
  CHECK(w0.weights == vol.weights);
  const WeightedVolume w1 = weighted_measures(vol, Quaternion(1.0), cim());
  double s = 0.0;
  for (double w : w1.weights) s += w;
  CHECK(s == doctest::Approx((std::exp(2.0) - 1.0) / 2.0).epsilon(1e-12));
  CHECK(s == doctest::Approx(3.1945).epsilon(1e-4));

  const auto surf = surface_quadrature(Domain4::unit_ball(), res);
  const WeightedSurface ws = weighted_measures(surf, {}, cim());
  Quaternion total;
  for (const auto& e : ws.elements) total += e;
  CHECK(norm(total) < 1e-10);
}

TEST_CASE("surface element") {
  CHECK(kSurfaceOrientation == 1.0);
  CHECK(surface_element(Quaternion(1.0), cim()) == Quaternion(1.0));
  // psi-coordinates of e2 are (0, 0, -1, 0), so n_psi = -psi_2 = e2.
  CHECK(surface_element(kE2, cim()) == kE2);
}

TEST_CASE("domains") {
  const Domain4 b = Domain4::ball(Quaternion{1, 0, 0, 0}, 2.0);
  CHECK(b.contains(Quaternion{2, 0, 0, 0}));
  CHECK_FALSE(b.contains(Quaternion{3.5, 0, 0, 0}));
  CHECK(b.signed_distance(Quaternion{1, 0, 0, 0}) == doctest::Approx(2.0));
  CHECK(b.signed_distance(Quaternion{4, 0, 0, 0}) == doctest::Approx(-1.0));
  CHECK(b.boundary_measure() == doctest::Approx(2 * M_PI * M_PI * 8));
  const Domain4 x = Domain4::box({0, 0, 0, 0}, {1, 2, 1, 1});
  CHECK(x.length_scale() == doctest::Approx(0.5));
  CHECK(x.signed_distance(Quaternion{0.5, 1, 0.5, 0.5}) == doctest::Approx(0.5));
  CHECK(x.boundary_measure() == doctest::Approx(2 * (2 + 1 + 2 + 2)));
  const auto [lo, hi] = x.linear_range(Quaternion{1, -1, 0, 0});
  CHECK(lo == doctest::Approx(-2.0));
  CHECK(hi == doctest::Approx(1.0));
  CHECK_THROWS(Domain4::ball({}, -1.0));
  CHECK_THROWS(Domain4::box({0, 0, 0, 0}, {1, 0, 1, 1}));

  const Domain4 back = Domain4::from_json(x.to_json());
  CHECK(back.to_json() == x.to_json());
  const Domain4 t = translated(b, kE1);
  CHECK(t.centroid() == Quaternion{1, 1, 0, 0});

  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    CHECK(x.signed_distance(sample_point(x, rng, 0.5)) >= 0.25 - 1e-12);
    CHECK(norm(sample_point(b, rng, 0.5) - b.centroid()) <= 1.0 + 1e-12);
  }
}

TEST_CASE("resolutions") {
  const Resolution r{6, 6, 12, 6, 4};
  const Resolution d = r.doubled();
  CHECK(d.sphere_polar == 12);
  CHECK(d.box == 8);
  const Resolution back = Resolution::from_json(r.to_json());
  CHECK(back.sphere_periodic == 12);
  CHECK(back.radial == 6);
  CHECK_THROWS(Resolution::from_json(nlohmann::json::parse(R"({"sphere":[0,2,2]})")));
}
