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

#include "hyperholo/quaternion.hpp"

#include <ostream>

#include "hyperholo/error.hpp"
#include "hyperholo/structural_set.hpp"

namespace hyperholo {

Quaternion inverse(const Quaternion& q) {
  const double n2 = norm2(q);
  if (n2 == 0.0) throw ZeroDivisorError("inverse of the zero quaternion");
  return conj(q) / n2;
}

ConjNormInv conj_norm_inv(const Quaternion& q) {
  return {conj(q), norm(q), inverse(q)};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.q0 << ", " << q.q1 << ", " << q.q2 << ", " << q.q3
            << ')';
}

namespace {

double det4(const std::array<Quaternion, 4>& cols) {
  // Laplace expansion along the first row; m[i][j] = cols[j][i].
  auto m = [&](int i, int j) { return cols[static_cast<size_t>(j)][i]; };
  auto det3 = [&](int skip_col) {
    int c[3];
    for (int j = 0, n = 0; j < 4; ++j)
      if (j != skip_col) c[n++] = j;
    return m(1, c[0]) * (m(2, c[1]) * m(3, c[2]) - m(2, c[2]) * m(3, c[1])) -
           m(1, c[1]) * (m(2, c[0]) * m(3, c[2]) - m(2, c[2]) * m(3, c[0])) +
           m(1, c[2]) * (m(2, c[0]) * m(3, c[1]) - m(2, c[1]) * m(3, c[0]));
  };
  double d = 0.0;
  for (int j = 0; j < 4; ++j) d += ((j % 2) ? -1.0 : 1.0) * m(0, j) * det3(j);
  return d;
}

}  // namespace

StructuralSet::StructuralSet(const std::array<Quaternion, 4>& psi,
                             double tolerance)
    : psi_(psi), sign_(1) {
  for (size_t k = 0; k < 4; ++k) {
    for (size_t m = 0; m < 4; ++m) {
      const double expected = k == m ? 1.0 : 0.0;
      if (std::fabs(dot(psi_[k], psi_[m]) - expected) > tolerance) {
        throw InvalidArgument("structural set is not orthonormal: <psi_" +
                              std::to_string(k) + ", psi_" +
                              std::to_string(m) + "> = " +
                              std::to_string(dot(psi_[k], psi_[m])));
      }
    }
  }
  sign_ = det4(psi_) > 0.0 ? 1 : -1;
}

const StructuralSet& StructuralSet::cimmino() {
  static const StructuralSet s({Quaternion(1.0), kE1, -kE2, kE3});
  return s;
}

const StructuralSet& StructuralSet::standard() {
  static const StructuralSet s({Quaternion(1.0), kE1, kE2, kE3});
  return s;
}

StructuralSet StructuralSet::conjugate() const {
  return StructuralSet(
      {conj(psi_[0]), conj(psi_[1]), conj(psi_[2]), conj(psi_[3])});
}

PsiCoords psi_coords(const Quaternion& q, const StructuralSet& psi) {
  PsiCoords c;
  for (int k = 0; k < 4; ++k) c[k] = dot(q, psi[k]);
  return c;
}

Quaternion from_psi_coords(const PsiCoords& c, const StructuralSet& psi) {
  Quaternion q;
  for (int k = 0; k < 4; ++k) q += c[k] * psi[k];
  return q;
}

double pairing(const Quaternion& q, const Quaternion& x,
               const StructuralSet& psi) {
  const PsiCoords a = psi_coords(q, psi);
  const PsiCoords b = psi_coords(x, psi);
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

}  // namespace hyperholo
