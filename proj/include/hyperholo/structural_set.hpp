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

#include "hyperholo/quaternion.hpp"

namespace hyperholo {

/// Coordinates of a quaternion in a structural-set frame.
struct PsiCoords {
  std::array<double, 4> c{};

  constexpr double operator[](int k) const { return c[static_cast<size_t>(k)]; }
  constexpr double& operator[](int k) { return c[static_cast<size_t>(k)]; }
};

/// Orthonormal frame psi_0..psi_3 of H together with its orientation sign
/// (determinant of the coordinate matrix). Immutable once constructed.
///
/// Differentiation along the frame is what gives the frame its meaning:
/// the psi-Fueter operator is sum_k psi_k d/dc_k, where c_k is the k-th
/// psi-coordinate of the point, i.e. the directional derivative along psi_k.
class StructuralSet {
 public:
  /// Throws InvalidArgument unless the four quaternions are orthonormal to
  /// `tolerance`.
  explicit StructuralSet(const std::array<Quaternion, 4>& psi,
                         double tolerance = 1e-12);

  /// {1, e1, -e2, e3}: the frame in which psi-hyperholomorphy is the
  /// Cimmino system. Its sign is -1.
  static const StructuralSet& cimmino();

  /// {1, e1, e2, e3}.
  static const StructuralSet& standard();

  const Quaternion& operator[](int k) const {
    return psi_[static_cast<size_t>(k)];
  }
  const std::array<Quaternion, 4>& elements() const { return psi_; }
  int sign() const { return sign_; }

  /// Frame {conj(psi_0), ..., conj(psi_3)}; its Fueter operator composed
  /// with this one gives the Laplacian.
  StructuralSet conjugate() const;

  friend bool operator==(const StructuralSet& a, const StructuralSet& b) {
    return a.psi_ == b.psi_;
  }

 private:
  std::array<Quaternion, 4> psi_;
  int sign_;
};

/// c_k = <q, psi_k>.
PsiCoords psi_coords(const Quaternion& q, const StructuralSet& psi);

/// sum_k c_k psi_k.
Quaternion from_psi_coords(const PsiCoords& c, const StructuralSet& psi);

/// <q, x>_psi = sum_k q_k x_k over psi-coordinates. The frame is orthonormal,
/// so this is the Euclidean dot product for every psi.
double pairing(const Quaternion& q, const Quaternion& x,
               const StructuralSet& psi);

}  // namespace hyperholo
