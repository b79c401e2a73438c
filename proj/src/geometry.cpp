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

#include "hyperholo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperholo/error.hpp"
#include "hyperholo/fields.hpp"
#include "hyperholo/numerics.hpp"

namespace hyperholo {

using std::numbers::pi;

Domain4 Domain4::ball(const Quaternion& center, double radius) {
  if (!(radius > 0.0)) throw InvalidArgument("ball radius must be > 0");
  return Domain4(Ball{center, radius});
}

Domain4 Domain4::box(const std::array<double, 4>& lo,
                     const std::array<double, 4>& hi) {
  for (size_t k = 0; k < 4; ++k) {
    if (!(lo[k] < hi[k])) throw InvalidArgument("box requires lo < hi");
  }
  return Domain4(Box{lo, hi});
}

bool Domain4::contains(const Quaternion& x) const {
  return signed_distance(x) > 0.0;
}

double Domain4::signed_distance(const Quaternion& x) const {
  if (const auto* b = std::get_if<Ball>(&shape_)) {
    return b->radius - norm(x - b->center);
  }
  const Box& b = std::get<Box>(shape_);
  double inside = std::numeric_limits<double>::infinity();
  double outside2 = 0.0;
  bool is_inside = true;
  for (int k = 0; k < 4; ++k) {
    const auto kk = static_cast<size_t>(k);
    const double below = b.lo[kk] - x[k];
    const double above = x[k] - b.hi[kk];
    const double excess = std::max(below, above);
    if (excess > 0.0) {
      is_inside = false;
      outside2 += excess * excess;
    }
    inside = std::min(inside, std::min(-below, -above));
  }
  return is_inside ? inside : -std::sqrt(outside2);
}

double Domain4::length_scale() const {
  if (const auto* b = std::get_if<Ball>(&shape_)) return b->radius;
  const Box& b = std::get<Box>(shape_);
  double m = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < 4; ++k) m = std::min(m, 0.5 * (b.hi[k] - b.lo[k]));
  return m;
}

double Domain4::volume() const {
  if (const auto* b = std::get_if<Ball>(&shape_)) {
    return 0.5 * pi * pi * std::pow(b->radius, 4);
  }
  const Box& b = std::get<Box>(shape_);
  double v = 1.0;
  for (size_t k = 0; k < 4; ++k) v *= b.hi[k] - b.lo[k];
  return v;
}

double Domain4::boundary_measure() const {
  if (const auto* b = std::get_if<Ball>(&shape_)) {
    return 2.0 * pi * pi * std::pow(b->radius, 3);
  }
  const Box& b = std::get<Box>(shape_);
  double s = 0.0;
  for (size_t k = 0; k < 4; ++k) {
    double facet = 1.0;
    for (size_t j = 0; j < 4; ++j)
      if (j != k) facet *= b.hi[j] - b.lo[j];
    s += 2.0 * facet;
  }
  return s;
}

Quaternion Domain4::centroid() const {
  if (const auto* b = std::get_if<Ball>(&shape_)) return b->center;
  const Box& b = std::get<Box>(shape_);
  Quaternion c;
  for (int k = 0; k < 4; ++k) {
    c[k] = 0.5 * (b.lo[static_cast<size_t>(k)] + b.hi[static_cast<size_t>(k)]);
  }
  return c;
}

std::pair<double, double> Domain4::linear_range(const Quaternion& q) const {
  if (const auto* b = std::get_if<Ball>(&shape_)) {
    const double c = dot(q, b->center);
    return {c - norm(q) * b->radius, c + norm(q) * b->radius};
  }
  const Box& b = std::get<Box>(shape_);
  double lo = 0.0;
  double hi = 0.0;
  for (int k = 0; k < 4; ++k) {
    const auto kk = static_cast<size_t>(k);
    const double a = q[k] * b.lo[kk];
    const double c = q[k] * b.hi[kk];
    lo += std::min(a, c);
    hi += std::max(a, c);
  }
  return {lo, hi};
}

nlohmann::json Domain4::to_json() const {
  if (const auto* b = std::get_if<Ball>(&shape_)) {
    return {{"type", "ball"},
            {"center", hyperholo::to_json(b->center)},
            {"radius", b->radius}};
  }
  const Box& b = std::get<Box>(shape_);
  return {{"type", "box"}, {"lo", b.lo}, {"hi", b.hi}};
}

Domain4 Domain4::from_json(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "ball") {
    const Quaternion c =
        j.contains("center") ? quaternion_from_json(j["center"]) : Quaternion{};
    return ball(c, j.value("radius", 1.0));
  }
  if (type == "box") {
    return box(j.at("lo").get<std::array<double, 4>>(),
               j.at("hi").get<std::array<double, 4>>());
  }
  throw InvalidArgument("unknown domain type '" + type + "'");
}

Quaternion sample_point(const Domain4& domain, Rng& rng, double shrink) {
  if (domain.is_ball()) {
    const Ball& b = domain.as_ball();
    return rng.in_ball(b.center, shrink * b.radius);
  }
  const Box& b = domain.as_box();
  const Quaternion c = domain.centroid();
  Quaternion x;
  for (int k = 0; k < 4; ++k) {
    const auto kk = static_cast<size_t>(k);
    const double half = 0.5 * shrink * (b.hi[kk] - b.lo[kk]);
    x[k] = rng.uniform(c[k] - half, c[k] + half);
  }
  return x;
}

Domain4 translated(const Domain4& domain, const Quaternion& b) {
  if (domain.is_ball()) {
    return Domain4::ball(domain.as_ball().center + b, domain.as_ball().radius);
  }
  auto lo = domain.as_box().lo;
  auto hi = domain.as_box().hi;
  for (int k = 0; k < 4; ++k) {
    lo[static_cast<size_t>(k)] += b[k];
    hi[static_cast<size_t>(k)] += b[k];
  }
  return Domain4::box(lo, hi);
}

double SurfaceQuadrature::total_weight() const { return pairwise_sum(weights); }
double VolumeQuadrature::total_weight() const { return pairwise_sum(weights); }

Resolution Resolution::doubled() const {
  return {2 * sphere_polar, 2 * sphere_azimuthal, 2 * sphere_periodic,
          2 * radial, 2 * box};
}

nlohmann::json Resolution::to_json() const {
  return {{"sphere", {sphere_polar, sphere_azimuthal, sphere_periodic}},
          {"radial", radial},
          {"box", box}};
}

Resolution Resolution::from_json(const nlohmann::json& j) {
  Resolution r;
  if (j.contains("sphere")) {
    const auto s = j["sphere"].get<std::array<int, 3>>();
    r.sphere_polar = s[0];
    r.sphere_azimuthal = s[1];
    r.sphere_periodic = s[2];
  }
  r.radial = j.value("radial", r.radial);
  r.box = j.value("box", r.box);
  if (std::min({r.sphere_polar, r.sphere_azimuthal, r.sphere_periodic, r.radial, r.box}) < 1) {
    throw InvalidArgument("resolution counts must be positive");
  }
  return r;
}

namespace {

struct AngleRule {
  std::vector<double> angle;
  std::vector<double> weight;
};

// Gauss-Legendre on [0, pi] with sin^power(angle) folded into the weight.
AngleRule polar_rule(int n, int power) {
  const GaussRule g = gauss_legendre(n);
  AngleRule r;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const double a = 0.5 * pi * (g.nodes[i] + 1.0);
    r.angle.push_back(a);
    r.weight.push_back(0.5 * pi * g.weights[i] * std::pow(std::sin(a), power));
  }
  return r;
}

// Unit 3-sphere directions with area weights.
void unit_sphere_rule(int n1, int n2, int n3, std::vector<Quaternion>& dirs,
                      std::vector<double>& weights) {
  if (n1 < 2 || n2 < 2 || n3 < 2) {
    throw InvalidArgument("sphere resolutions must be >= 2");
  }
  const AngleRule chi = polar_rule(n1, 2);
  const AngleRule theta = polar_rule(n2, 1);
  const double dphi = 2.0 * pi / n3;
  dirs.clear();
  weights.clear();
  dirs.reserve(static_cast<size_t>(n1 * n2 * n3));
  weights.reserve(static_cast<size_t>(n1 * n2 * n3));
  for (size_t a = 0; a < chi.angle.size(); ++a) {
    const double sc = std::sin(chi.angle[a]);
    const double cc = std::cos(chi.angle[a]);
    for (size_t b = 0; b < theta.angle.size(); ++b) {
      const double st = std::sin(theta.angle[b]);
      const double ct = std::cos(theta.angle[b]);
      for (int c = 0; c < n3; ++c) {
        const double phi = dphi * c;
        dirs.emplace_back(cc, sc * ct, sc * st * std::cos(phi),
                          sc * st * std::sin(phi));
        weights.push_back(chi.weight[a] * theta.weight[b] * dphi);
      }
    }
  }
}

}  // namespace

SurfaceQuadrature sphere_quadrature(const Ball& ball, int n1, int n2, int n3) {
  std::vector<Quaternion> dirs;
  std::vector<double> w;
  unit_sphere_rule(n1, n2, n3, dirs, w);
  SurfaceQuadrature s;
  const double r3 = std::pow(ball.radius, 3);
  s.nodes.reserve(dirs.size());
  for (size_t i = 0; i < dirs.size(); ++i) {
    s.nodes.push_back(ball.center + ball.radius * dirs[i]);
    s.normals.push_back(dirs[i]);
    s.weights.push_back(r3 * w[i]);
  }
  return s;
}

SurfaceQuadrature box_quadrature(const Box& box, int n) {
  if (n < 2) throw InvalidArgument("box resolution must be >= 2");
  const GaussRule g = gauss_legendre(n);
  SurfaceQuadrature s;
  for (int k = 0; k < 4; ++k) {
    int other[3];
    for (int j = 0, m = 0; j < 4; ++j)
      if (j != k) other[m++] = j;
    for (int side = 0; side < 2; ++side) {
      const auto kk = static_cast<size_t>(k);
      const double fixed = side == 0 ? box.lo[kk] : box.hi[kk];
      Quaternion normal;
      normal[k] = side == 0 ? -1.0 : 1.0;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int c = 0; c < n; ++c) {
            const int idx[3] = {a, b, c};
            Quaternion x;
            x[k] = fixed;
            double w = 1.0;
            for (int m = 0; m < 3; ++m) {
              const auto o = static_cast<size_t>(other[m]);
              const double half = 0.5 * (box.hi[o] - box.lo[o]);
              const auto gi = static_cast<size_t>(idx[m]);
              x[other[m]] = box.lo[o] + half * (g.nodes[gi] + 1.0);
              w *= half * g.weights[gi];
            }
            s.nodes.push_back(x);
            s.normals.push_back(normal);
            s.weights.push_back(w);
          }
        }
      }
    }
  }
  return s;
}

SurfaceQuadrature surface_quadrature(const Domain4& domain,
                                     const Resolution& res) {
  if (domain.is_ball()) {
    return sphere_quadrature(domain.as_ball(), res.sphere_polar,
                             res.sphere_azimuthal, res.sphere_periodic);
  }
  return box_quadrature(domain.as_box(), res.box);
}

VolumeQuadrature volume_quadrature(const Domain4& domain,
                                   const Resolution& res) {
  VolumeQuadrature v;
  if (domain.is_ball()) {
    if (res.radial < 2) throw InvalidArgument("radial resolution must be >= 2");
    const Ball& ball = domain.as_ball();
    std::vector<Quaternion> dirs;
    std::vector<double> w;
    unit_sphere_rule(res.sphere_polar, res.sphere_azimuthal,
                     res.sphere_periodic, dirs, w);
    const GaussRule g = gauss_legendre(res.radial);
    const double half = 0.5 * ball.radius;
    v.nodes.reserve(dirs.size() * g.nodes.size());
    for (size_t i = 0; i < g.nodes.size(); ++i) {
      const double r = half * (g.nodes[i] + 1.0);
      const double wr = half * g.weights[i] * r * r * r;
      for (size_t j = 0; j < dirs.size(); ++j) {
        v.nodes.push_back(ball.center + r * dirs[j]);
        v.weights.push_back(wr * w[j]);
      }
    }
    return v;
  }
  const int n = res.box;
  if (n < 2) throw InvalidArgument("box resolution must be >= 2");
  const Box& box = domain.as_box();
  const GaussRule g = gauss_legendre(n);
  std::array<double, 4> half{};
  for (size_t k = 0; k < 4; ++k) half[k] = 0.5 * (box.hi[k] - box.lo[k]);
  const auto un = static_cast<size_t>(n);
  v.nodes.reserve(un * un * un * un);
  for (size_t a = 0; a < un; ++a)
    for (size_t b = 0; b < un; ++b)
      for (size_t c = 0; c < un; ++c)
        for (size_t d = 0; d < un; ++d) {
          const size_t idx[4] = {a, b, c, d};
          Quaternion x;
          double w = 1.0;
          for (size_t k = 0; k < 4; ++k) {
            x[static_cast<int>(k)] = box.lo[k] + half[k] * (g.nodes[idx[k]] + 1.0);
            w *= half[k] * g.weights[idx[k]];
          }
          v.nodes.push_back(x);
          v.weights.push_back(w);
        }
  return v;
}

Quaternion surface_element(const Quaternion& normal, const StructuralSet& psi) {
  return kSurfaceOrientation * from_psi_coords(psi_coords(normal, psi), psi);
}

WeightedVolume weighted_measures(const VolumeQuadrature& quad,
                                 const Quaternion& q,
                                 const StructuralSet& psi) {
  WeightedVolume out;
  out.nodes = quad.nodes;
  out.weights.resize(quad.size());
  for (size_t i = 0; i < quad.size(); ++i) {
    out.weights[i] =
        quad.weights[i] * std::exp(2.0 * pairing(q, quad.nodes[i], psi));
  }
  return out;
}

WeightedSurface weighted_measures(const SurfaceQuadrature& quad,
                                  const Quaternion& q,
                                  const StructuralSet& psi) {
  WeightedSurface out;
  out.nodes = quad.nodes;
  out.weights.resize(quad.size());
  out.elements.resize(quad.size());
  for (size_t i = 0; i < quad.size(); ++i) {
    out.weights[i] =
        quad.weights[i] * std::exp(2.0 * pairing(q, quad.nodes[i], psi));
    out.elements[i] = out.weights[i] * surface_element(quad.normals[i], psi);
  }
  return out;
}

}  // namespace hyperholo
