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

#include <span>

#include "hyperholo/fields.hpp"
#include "hyperholo/geometry.hpp"
#include "hyperholo/operators.hpp"
#include "hyperholo/report.hpp"

namespace hyperholo {

/// Minimum distance of reconstruction points from the boundary, as a
/// fraction of the domain's length scale.
inline constexpr double kBoundaryFloor = 0.3;

/// sum_i f(y_i) nu_i g(y_i) over a weighted surface.
Quaternion boundary_integral(const QuaternionField& f, const QuaternionField& g,
                             const WeightedSurface& surface);

struct StokesSides {
  Quaternion boundary;  // int f nu_q g
  Quaternion volume;    // int (D_q^right[f] g + f D_q^left[g]) dlambda_q
};

StokesSides stokes_sides(const QuaternionField& f, const QuaternionField& g,
                         const Quaternion& q, const StructuralSet& psi,
                         const Domain4& domain, const Resolution& res,
                         const DiffOptions& diff = {});

/// Residual |boundary - volume| / max(1, |volume|).
Report stokes_check(const QuaternionField& f, const QuaternionField& g,
                    const Quaternion& q, const StructuralSet& psi,
                    const Domain4& domain, const Resolution& res,
                    double tolerance = 1e-6);

struct TheoremIntegral {
  Quaternion integral;     // int nu_q f
  PsiCoords components;    // psi-coordinates of `integral`
  double scale = 0.0;      // boundary measure * max |f| on the nodes
  /// |q int f dlambda_q|: what the Stokes identity (with 1 as left factor)
  /// says `integral` equals for a left solution f.
  double stokes_prediction = 0.0;
  /// |int e^{<q,x>} sigma f|, the boundary integral with the weight that
  /// does annihilate every left solution of the perturbed operator.
  double exp_weight_residual = 0.0;
};

TheoremIntegral cauchy_theorem_integral(const QuaternionField& f,
                                        const Quaternion& q,
                                        const StructuralSet& psi,
                                        const Domain4& domain,
                                        const Resolution& res);

/// Residual |int nu_q f| / scale.
Report cauchy_theorem_check(const QuaternionField& f, const Quaternion& q,
                            const StructuralSet& psi, const Domain4& domain,
                            const Resolution& res, double tolerance = 1e-8);

/// Boundary nodes and surface elements reused across reconstruction points.
class CauchyIntegrator {
 public:
  CauchyIntegrator(const Domain4& domain, const Resolution& res,
                   const StructuralSet& psi,
                   double boundary_floor = kBoundaryFloor);

  /// int K_q(y - x) sigma_y f(y). Throws BoundaryDistanceError when x is
  /// within boundary_floor * length_scale of the boundary.
  Quaternion reconstruct(const QuaternionField& f, const Quaternion& q,
                         const Quaternion& x) const;

  const Domain4& domain() const { return domain_; }

 private:
  Domain4 domain_;
  StructuralSet psi_;
  double floor_;
  SurfaceQuadrature quad_;
  std::vector<Quaternion> elements_;  // w_i * surface_element(n_i)
};

Quaternion cauchy_reconstruct(const QuaternionField& f, const Quaternion& q,
                              const StructuralSet& psi, const Domain4& domain,
                              const Quaternion& x, const Resolution& res,
                              double boundary_floor = kBoundaryFloor);

struct FormulaCheckOptions {
  double tolerance = 1e-6;
  /// Coarse resolution of the doubling study; its error must be above the
  /// rounding floor for the reduction factor to mean anything.
  Resolution study{6, 6, 12, 6, 4};
  double min_reduction = 4.0;
};

/// Interior error max |rec - f| / (1 + |f|), exterior max |rec|, and the
/// error reduction under doubled resolution.
Report cauchy_formula_check(const QuaternionField& f, const Quaternion& q,
                            const StructuralSet& psi, const Domain4& domain,
                            std::span<const Quaternion> interior,
                            std::span<const Quaternion> exterior,
                            const Resolution& res,
                            const FormulaCheckOptions& options = {});

}  // namespace hyperholo
