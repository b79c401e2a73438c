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

#include "hyperholo/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperholo/error.hpp"
#include "hyperholo/kernels.hpp"
#include "hyperholo/numerics.hpp"

namespace hyperholo {

Quaternion boundary_integral(const QuaternionField& f, const QuaternionField& g,
                             const WeightedSurface& surface) {
  std::vector<Quaternion> terms(surface.nodes.size());
  parallel_for(terms.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) {
      const Quaternion& y = surface.nodes[i];
      terms[i] = f(y) * surface.elements[i] * g(y);
    }
  });
  return pairwise_sum(terms);
}

StokesSides stokes_sides(const QuaternionField& f, const QuaternionField& g,
                         const Quaternion& q, const StructuralSet& psi,
                         const Domain4& domain, const Resolution& res,
                         const DiffOptions& diff) {
  StokesSides sides;
  const WeightedSurface surface =
      weighted_measures(surface_quadrature(domain, res), q, psi);
  sides.boundary = boundary_integral(f, g, surface);

  const WeightedVolume vol =
      weighted_measures(volume_quadrature(domain, res), q, psi);
  std::vector<Quaternion> terms(vol.nodes.size());
  parallel_for(terms.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) {
      const Quaternion& x = vol.nodes[i];
      const Quaternion rf = apply(OperatorKind::right(q), f, x, psi, diff);
      const Quaternion lg = apply(OperatorKind::left(q), g, x, psi, diff);
      terms[i] = vol.weights[i] * (rf * g(x) + f(x) * lg);
    }
  });
  sides.volume = pairwise_sum(terms);
  return sides;
}

namespace {

nlohmann::json quaternion_json(const Quaternion& q) { return to_json(q); }

nlohmann::json base_params(const Quaternion& q, const Domain4& domain,
                           const Resolution& res) {
  return {{"q", quaternion_json(q)},
          {"domain", domain.to_json()},
          {"resolution", res.to_json()}};
}

}  // namespace

Report stokes_check(const QuaternionField& f, const QuaternionField& g,
                    const Quaternion& q, const StructuralSet& psi,
                    const Domain4& domain, const Resolution& res,
                    double tolerance) {
  const StokesSides s = stokes_sides(f, g, q, psi, domain, res);
  Report r("stokes", tolerance);
  r.params = base_params(q, domain, res);
  r.params["f"] = f.label();
  r.params["g"] = g.label();
  const double diff = norm(s.boundary - s.volume);
  r.add("relative", diff / std::max(1.0, norm(s.volume)));
  r.diagnostics["boundary"] = to_json(s.boundary);
  r.diagnostics["volume"] = to_json(s.volume);
  r.diagnostics["absolute"] = diff;
  return r.finalize();
}

TheoremIntegral cauchy_theorem_integral(const QuaternionField& f,
                                        const Quaternion& q,
                                        const StructuralSet& psi,
                                        const Domain4& domain,
                                        const Resolution& res) {
  const SurfaceQuadrature quad = surface_quadrature(domain, res);
  const WeightedSurface surface = weighted_measures(quad, q, psi);
  const size_t n = quad.size();
  std::vector<Quaternion> nu_f(n);
  std::vector<Quaternion> exp_f(n);
  std::vector<double> fmax(n);
  parallel_for(n, [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) {
      const Quaternion& y = quad.nodes[i];
      const Quaternion fy = f(y);
      nu_f[i] = surface.elements[i] * fy;
      exp_f[i] = (quad.weights[i] * std::exp(pairing(q, y, psi))) *
                 surface_element(quad.normals[i], psi) * fy;
      fmax[i] = norm(fy);
    }
  });
  TheoremIntegral t;
  t.integral = pairwise_sum(nu_f);
  t.components = psi_coords(t.integral, psi);
  t.scale = domain.boundary_measure() *
            std::max(*std::max_element(fmax.begin(), fmax.end()), 1e-300);
  t.exp_weight_residual = norm(pairwise_sum(exp_f));

  const WeightedVolume vol =
      weighted_measures(volume_quadrature(domain, res), q, psi);
  std::vector<Quaternion> vf(vol.nodes.size());
  parallel_for(vf.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) vf[i] = vol.weights[i] * f(vol.nodes[i]);
  });
  t.stokes_prediction = norm(q * pairwise_sum(vf));
  return t;
}

Report cauchy_theorem_check(const QuaternionField& f, const Quaternion& q,
                            const StructuralSet& psi, const Domain4& domain,
                            const Resolution& res, double tolerance) {
  const TheoremIntegral t = cauchy_theorem_integral(f, q, psi, domain, res);
  Report r("cauchy-theorem", tolerance);
  r.params = base_params(q, domain, res);
  r.params["f"] = f.label();
  r.add("relative", norm(t.integral) / t.scale);
  nlohmann::json comps = nlohmann::json::array();
  for (int k = 0; k < 4; ++k) comps.push_back(t.components[k]);
  r.diagnostics["components"] = comps;
  r.diagnostics["scale"] = t.scale;
  r.diagnostics["stokes_prediction"] = t.stokes_prediction / t.scale;
  r.diagnostics["exp_weight_residual"] = t.exp_weight_residual / t.scale;
  return r.finalize();
}

CauchyIntegrator::CauchyIntegrator(const Domain4& domain,
                                   const Resolution& res,
                                   const StructuralSet& psi,
                                   double boundary_floor)
    : domain_(domain),
      psi_(psi),
      floor_(boundary_floor),
      quad_(surface_quadrature(domain, res)) {
  elements_.resize(quad_.size());
  for (size_t i = 0; i < quad_.size(); ++i) {
    elements_[i] = quad_.weights[i] * surface_element(quad_.normals[i], psi_);
  }
}

Quaternion CauchyIntegrator::reconstruct(const QuaternionField& f,
                                         const Quaternion& q,
                                         const Quaternion& x) const {
  const double dist = std::fabs(domain_.signed_distance(x));
  if (dist < floor_ * domain_.length_scale()) {
    std::ostringstream msg;
    msg << "point " << x << " is " << dist
        << " from the boundary; the floor is " << floor_
        << " times the length scale";
    throw BoundaryDistanceError(msg.str());
  }
  std::vector<Quaternion> terms(quad_.size());
  parallel_for(terms.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) {
      const Quaternion& y = quad_.nodes[i];
      terms[i] = cauchy_kernel_q(y, x, q, psi_) * elements_[i] * f(y);
    }
  });
  return pairwise_sum(terms);
}

Quaternion cauchy_reconstruct(const QuaternionField& f, const Quaternion& q,
                              const StructuralSet& psi, const Domain4& domain,
                              const Quaternion& x, const Resolution& res,
                              double boundary_floor) {
  return CauchyIntegrator(domain, res, psi, boundary_floor)
      .reconstruct(f, q, x);
}

namespace {

double interior_error(const CauchyIntegrator& integ, const QuaternionField& f,
                      const Quaternion& q,
                      std::span<const Quaternion> points) {
  double worst = 0.0;
  for (const auto& x : points) {
    const Quaternion fx = f(x);
    worst = std::max(worst,
                     norm(integ.reconstruct(f, q, x) - fx) / (1.0 + norm(fx)));
  }
  return worst;
}

}  // namespace

Report cauchy_formula_check(const QuaternionField& f, const Quaternion& q,
                            const StructuralSet& psi, const Domain4& domain,
                            std::span<const Quaternion> interior,
                            std::span<const Quaternion> exterior,
                            const Resolution& res,
                            const FormulaCheckOptions& options) {
  Report r("cauchy-formula", options.tolerance);
  r.params = base_params(q, domain, res);
  r.params["f"] = f.label();
  r.params["interior_points"] = interior.size();
  r.params["exterior_points"] = exterior.size();
  r.params["boundary_floor"] = kBoundaryFloor;
  r.params["study_resolution"] = options.study.to_json();

  const CauchyIntegrator integ(domain, res, psi);
  if (!interior.empty()) {
    r.add("interior_max_error", interior_error(integ, f, q, interior));
    const Quaternion rec = integ.reconstruct(f, q, interior.front());
    nlohmann::json comps = nlohmann::json::array();
    const PsiCoords c = psi_coords(rec, psi);
    for (int k = 0; k < 4; ++k) comps.push_back(c[k]);
    r.diagnostics["first_point_components"] = comps;
  }
  if (!exterior.empty()) {
    double worst = 0.0;
    for (const auto& x : exterior) {
      worst = std::max(worst, norm(integ.reconstruct(f, q, x)));
    }
    r.add("exterior_max_value", worst);
  }
  if (!interior.empty()) {
    const CauchyIntegrator coarse(domain, options.study, psi);
    const CauchyIntegrator fine(domain, options.study.doubled(), psi);
    const double e1 = interior_error(coarse, f, q, interior);
    const double e2 = interior_error(fine, f, q, interior);
    r.diagnostics["study_error_coarse"] = e1;
    r.diagnostics["study_error_fine"] = e2;
    r.add_lower_bound("doubling_reduction", e1 / std::max(e2, 1e-300),
                      options.min_reduction);
  }
  return r.finalize();
}

}  // namespace hyperholo
