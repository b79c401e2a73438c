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

#pragma once

#include <array>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hyperholo/numerics.hpp"
#include "hyperholo/quaternion.hpp"
#include "hyperholo/structural_set.hpp"

namespace hyperholo {

struct Ball {
  Quaternion center;
  double radius = 1.0;
};

struct Box {
  std::array<double, 4> lo{};
  std::array<double, 4> hi{};
};

/// A 4-ball or an axis-aligned 4-box.
class Domain4 {
 public:
  static Domain4 ball(const Quaternion& center, double radius);
  static Domain4 box(const std::array<double, 4>& lo,
                     const std::array<double, 4>& hi);
  static Domain4 unit_ball() { return ball({}, 1.0); }
  static Domain4 unit_box() { return box({0, 0, 0, 0}, {1, 1, 1, 1}); }

  bool is_ball() const { return std::holds_alternative<Ball>(shape_); }
  const Ball& as_ball() const { return std::get<Ball>(shape_); }
  const Box& as_box() const { return std::get<Box>(shape_); }

  bool contains(const Quaternion& x) const;
  /// Distance to the boundary, positive inside and negative outside.
  double signed_distance(const Quaternion& x) const;
  /// Radius for a ball, smallest half-edge for a box.
  double length_scale() const;
  double volume() const;
  double boundary_measure() const;
  Quaternion centroid() const;
  /// Extremes of the linear function <q, x> over the closed domain.
  std::pair<double, double> linear_range(const Quaternion& q) const;

  nlohmann::json to_json() const;
  static Domain4 from_json(const nlohmann::json& j);

 private:
  explicit Domain4(std::variant<Ball, Box> shape) : shape_(shape) {}
  std::variant<Ball, Box> shape_;
};

/// Uniform sample from the domain shrunk about its centroid by `shrink`.
Quaternion sample_point(const Domain4& domain, Rng& rng, double shrink = 1.0);

/// The image of the domain under x -> x + b.
Domain4 translated(const Domain4& domain, const Quaternion& b);

struct SurfaceQuadrature {
  std::vector<Quaternion> nodes;
  std::vector<Quaternion> normals;  // unit, outward
  std::vector<double> weights;      // 3-volume

  size_t size() const { return nodes.size(); }
  double total_weight() const;
};

struct VolumeQuadrature {
  std::vector<Quaternion> nodes;
  std::vector<double> weights;

  size_t size() const { return nodes.size(); }
  double total_weight() const;
};

/// Tensor resolutions. The ball uses (sphere_polar, sphere_azimuthal,
/// sphere_periodic) on the 3-sphere and `radial` Gauss points in r; the box
/// uses `box` Gauss points per axis.
struct Resolution {
  int sphere_polar = 24;
  int sphere_azimuthal = 24;
  int sphere_periodic = 48;
  int radial = 24;
  int box = 12;

  Resolution doubled() const;
  nlohmann::json to_json() const;
  static Resolution from_json(const nlohmann::json& j);
};

/// Hyperspherical tensor rule: Gauss-Legendre in the two polar angles with
/// sin^2 and sin absorbed into the weights, trapezoidal in the periodic one.
SurfaceQuadrature sphere_quadrature(const Ball& ball, int n1, int n2, int n3);

/// Eight 3-facets with tensor Gauss-Legendre nodes and constant normals.
SurfaceQuadrature box_quadrature(const Box& box, int n);

SurfaceQuadrature surface_quadrature(const Domain4& domain,
                                     const Resolution& res);

/// Tensor Gauss-Legendre on a box; radial Gauss (weight r^3) times the
/// sphere rule on a ball.
VolumeQuadrature volume_quadrature(const Domain4& domain,
                                   const Resolution& res);

/// Global orientation factor of the quaternionic surface element
/// sigma^psi = kSurfaceOrientation * n_psi dS. Pinned by the requirement
/// that the Cauchy formula reproduces f = 1 as +1 inside.
inline constexpr double kSurfaceOrientation = 1.0;

/// kSurfaceOrientation * n_psi, n_psi = sum_k n_k psi_k over the
/// psi-coordinates n_k of the outward normal.
Quaternion surface_element(const Quaternion& normal, const StructuralSet& psi);

struct WeightedVolume {
  std::vector<Quaternion> nodes;
  std::vector<double> weights;  // w * e^{2<q, x>_psi}
};

struct WeightedSurface {
  std::vector<Quaternion> nodes;
  std::vector<double> weights;        // w * e^{2<q, x>_psi}
  std::vector<Quaternion> elements;   // weights[i] * surface_element(n_i)
};

WeightedVolume weighted_measures(const VolumeQuadrature& quad,
                                 const Quaternion& q,
                                 const StructuralSet& psi);
WeightedSurface weighted_measures(const SurfaceQuadrature& quad,
                                  const Quaternion& q,
                                  const StructuralSet& psi);

}  // namespace hyperholo
