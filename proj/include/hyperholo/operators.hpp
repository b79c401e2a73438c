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

#include "hyperholo/fields.hpp"
#include "hyperholo/quaternion.hpp"
#include "hyperholo/structural_set.hpp"

namespace hyperholo {

enum class Side { left, right };

/// left:  sum_k psi_k d_k f + q f
/// right: sum_k d_k f psi_k + f q
/// where d_k is the derivative along psi_k (the k-th psi-coordinate).
struct OperatorKind {
  Side side = Side::left;
  Quaternion perturbation{};

  static OperatorKind left(const Quaternion& q = {}) { return {Side::left, q}; }
  static OperatorKind right(const Quaternion& q = {}) {
    return {Side::right, q};
  }
};

enum class DerivativeMode {
  automatic,  // exact partials when the field has them, else differences
  exact,
  finite_difference,
};

struct DiffOptions {
  double h = 1e-4;
  DerivativeMode mode = DerivativeMode::automatic;
  /// Combine steps h and h/2 to cancel the O(h^2) term.
  bool richardson = false;
};

/// Standard-coordinate partials, exact or by central differences.
Jacobian partials(const QuaternionField& f, const Quaternion& x,
                  const DiffOptions& options = {});

/// Derivatives along psi_0..psi_3 assembled from standard partials.
std::array<Quaternion, 4> frame_derivatives(const Jacobian& jac,
                                            const StructuralSet& psi);

Quaternion apply(const OperatorKind& kind, const QuaternionField& f,
                 const Quaternion& x, const StructuralSet& psi,
                 const DiffOptions& options = {});

/// apply() from precomputed standard partials and value.
Quaternion apply(const OperatorKind& kind, const Jacobian& jac,
                 const Quaternion& value, const StructuralSet& psi);

/// x -> apply(kind, f, x, psi) as a field (no closed-form partials).
QuaternionField operator_field(const OperatorKind& kind,
                               const QuaternionField& f,
                               const StructuralSet& psi,
                               const DiffOptions& options = {});

/// psi-coordinates, in the Cimmino frame {1, e1, -e2, e3}, of the left
/// operator with perturbation q applied to f at x. All four vanish exactly
/// when the standard components of f solve the inhomogeneous Cimmino system.
std::array<double, 4> cimmino_residual(const QuaternionField& f,
                                       const Quaternion& x,
                                       const Quaternion& q,
                                       const DiffOptions& options = {});

}  // namespace hyperholo
