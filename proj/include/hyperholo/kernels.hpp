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
#include <numbers>

#include "hyperholo/quaternion.hpp"
#include "hyperholo/structural_set.hpp"

namespace hyperholo {

/// 1 / (2 pi^2), the reciprocal area of the unit 3-sphere.
inline constexpr double kCauchyNormalization =
    1.0 / (2.0 * std::numbers::pi * std::numbers::pi);

struct KernelValue {
  Quaternion value;
  Quaternion displacement;  // y - x
};

/// K_psi(y - x) = conj(d) / (2 pi^2 |d|^4), d = y - x written in the psi
/// frame through its own psi-coordinates (so d_psi is d itself).
/// Throws SingularityError when y == x.
Quaternion cauchy_kernel(const Quaternion& y, const Quaternion& x,
                         const StructuralSet& psi);

/// e^{<q, y - x>_psi} K_psi(y - x).
Quaternion cauchy_kernel_q(const Quaternion& y, const Quaternion& x,
                           const Quaternion& q, const StructuralSet& psi);

KernelValue evaluate_kernel(const Quaternion& y, const Quaternion& x,
                            const Quaternion& q, const StructuralSet& psi);

/// K_q(y - x) times the quaternionic surface element for a unit outward
/// normal at y (see surface_element()).
Quaternion kernel_surface_pairing(const Quaternion& y, const Quaternion& x,
                                  const Quaternion& q,
                                  const Quaternion& normal,
                                  const StructuralSet& psi);

/// Standard components (K^q_0 .. K^q_3) of K_q(y - x).
std::array<double, 4> kernel_components(const Quaternion& y,
                                        const Quaternion& x,
                                        const Quaternion& q,
                                        const StructuralSet& psi);

/// Residuals of the four perturbed Fueter operators applied to the kernel,
/// differentiated in x (perturbation +q) and in y (perturbation -q), both
/// sides, by central differences. All four vanish away from the pole.
struct KernelHyperholomorphy {
  double left_in_x = 0.0;   // left operator, perturbation +q, variable x
  double right_in_x = 0.0;  // right operator, perturbation +q, variable x
  double left_in_y = 0.0;   // left operator, perturbation -q, variable y
  double right_in_y = 0.0;  // right operator, perturbation -q, variable y
  double right_in_y_plus_q = 0.0;  // right operator, +q, in y: does NOT vanish
};
KernelHyperholomorphy kernel_hyperholomorphy(const Quaternion& y,
                                             const Quaternion& x,
                                             const Quaternion& q,
                                             const StructuralSet& psi,
                                             double h = 1e-4);

}  // namespace hyperholo
