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

#include "hyperholo/kernels.hpp"

#include <cmath>

#include "hyperholo/error.hpp"
#include "hyperholo/geometry.hpp"

namespace hyperholo {

Quaternion cauchy_kernel(const Quaternion& y, const Quaternion& x,
                         const StructuralSet& psi) {
  // d_psi = sum_k c_k psi_k over the psi-coordinates c of y - x.
  const Quaternion d = from_psi_coords(psi_coords(y - x, psi), psi);
  const double r2 = norm2(d);
  if (r2 == 0.0) throw SingularityError("Cauchy kernel evaluated at its pole");
  return conj(d) * (kCauchyNormalization / (r2 * r2));
}

Quaternion cauchy_kernel_q(const Quaternion& y, const Quaternion& x,
                           const Quaternion& q, const StructuralSet& psi) {
  return std::exp(pairing(q, y - x, psi)) * cauchy_kernel(y, x, psi);
}

KernelValue evaluate_kernel(const Quaternion& y, const Quaternion& x,
                            const Quaternion& q, const StructuralSet& psi) {
  return {cauchy_kernel_q(y, x, q, psi), y - x};
}

Quaternion kernel_surface_pairing(const Quaternion& y, const Quaternion& x,
                                  const Quaternion& q,
                                  const Quaternion& normal,
                                  const StructuralSet& psi) {
  return cauchy_kernel_q(y, x, q, psi) * surface_element(normal, psi);
}

std::array<double, 4> kernel_components(const Quaternion& y,
                                        const Quaternion& x,
                                        const Quaternion& q,
                                        const StructuralSet& psi) {
  return cauchy_kernel_q(y, x, q, psi).coords();
}

namespace {

enum class Variable { x, y };

// Perturbed Fueter operator of either side applied to the kernel as a
// function of one variable, the other held fixed.
double operator_residual(const Quaternion& y, const Quaternion& x,
                         const Quaternion& q, const StructuralSet& psi,
                         Variable var, bool left, const Quaternion& pert,
                         double h) {
  auto k = [&](const Quaternion& p) {
    return var == Variable::x ? cauchy_kernel_q(y, p, q, psi)
                              : cauchy_kernel_q(p, x, q, psi);
  };
  const Quaternion at = var == Variable::x ? x : y;
  std::array<Quaternion, 4> jac{};
  for (int j = 0; j < 4; ++j) {
    Quaternion p = at;
    Quaternion m = at;
    p[j] += h;
    m[j] -= h;
    jac[static_cast<size_t>(j)] = (k(p) - k(m)) / (2.0 * h);
  }
  const Quaternion value = k(at);
  Quaternion out;
  for (int m = 0; m < 4; ++m) {
    Quaternion dm;
    for (int j = 0; j < 4; ++j) dm += psi[m][j] * jac[static_cast<size_t>(j)];
    out += left ? psi[m] * dm : dm * psi[m];
  }
  out += left ? pert * value : value * pert;
  return norm(out) / (1.0 + norm(value));
}

}  // namespace

KernelHyperholomorphy kernel_hyperholomorphy(const Quaternion& y,
                                             const Quaternion& x,
                                             const Quaternion& q,
                                             const StructuralSet& psi,
                                             double h) {
  KernelHyperholomorphy r;
  r.left_in_x = operator_residual(y, x, q, psi, Variable::x, true, q, h);
  r.right_in_x = operator_residual(y, x, q, psi, Variable::x, false, q, h);
  r.left_in_y = operator_residual(y, x, q, psi, Variable::y, true, -q, h);
  r.right_in_y = operator_residual(y, x, q, psi, Variable::y, false, -q, h);
  r.right_in_y_plus_q =
      operator_residual(y, x, q, psi, Variable::y, false, q, h);
  return r;
}

}  // namespace hyperholo
