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

#include "hyperholo/operators.hpp"

#include "hyperholo/error.hpp"

namespace hyperholo {

namespace {

Jacobian central_differences(const QuaternionField& f, const Quaternion& x,
                             double h) {
  Jacobian jac;
  for (int j = 0; j < 4; ++j) {
    Quaternion xp = x;
    Quaternion xm = x;
    xp[j] += h;
    xm[j] -= h;
    jac[static_cast<size_t>(j)] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return jac;
}

}  // namespace

Jacobian partials(const QuaternionField& f, const Quaternion& x,
                  const DiffOptions& options) {
  const bool use_exact =
      options.mode == DerivativeMode::exact ||
      (options.mode == DerivativeMode::automatic && f.has_partials());
  if (use_exact) return f.partials(x);
  if (!(options.h > 0.0)) throw InvalidArgument("difference step must be > 0");
  if (!options.richardson) return central_differences(f, x, options.h);
  const Jacobian coarse = central_differences(f, x, options.h);
  const Jacobian fine = central_differences(f, x, 0.5 * options.h);
  Jacobian out;
  for (size_t j = 0; j < 4; ++j) out[j] = (4.0 * fine[j] - coarse[j]) / 3.0;
  return out;
}

std::array<Quaternion, 4> frame_derivatives(const Jacobian& jac,
                                            const StructuralSet& psi) {
  std::array<Quaternion, 4> d{};
  for (int k = 0; k < 4; ++k) {
    for (int j = 0; j < 4; ++j) {
      d[static_cast<size_t>(k)] += psi[k][j] * jac[static_cast<size_t>(j)];
    }
  }
  return d;
}

Quaternion apply(const OperatorKind& kind, const Jacobian& jac,
                 const Quaternion& value, const StructuralSet& psi) {
  const auto d = frame_derivatives(jac, psi);
  Quaternion out;
  if (kind.side == Side::left) {
    for (int k = 0; k < 4; ++k) out += psi[k] * d[static_cast<size_t>(k)];
    out += kind.perturbation * value;
  } else {
    for (int k = 0; k < 4; ++k) out += d[static_cast<size_t>(k)] * psi[k];
    out += value * kind.perturbation;
  }
  return out;
}

Quaternion apply(const OperatorKind& kind, const QuaternionField& f,
                 const Quaternion& x, const StructuralSet& psi,
                 const DiffOptions& options) {
  return apply(kind, partials(f, x, options), f(x), psi);
}

QuaternionField operator_field(const OperatorKind& kind,
                               const QuaternionField& f,
                               const StructuralSet& psi,
                               const DiffOptions& options) {
  const char* side = kind.side == Side::left ? "L" : "R";
  return QuaternionField(
      std::string(side) + "[" + f.label() + "]",
      [kind, f, psi, options](const Quaternion& x) {
        return apply(kind, f, x, psi, options);
      });
}

std::array<double, 4> cimmino_residual(const QuaternionField& f,
                                       const Quaternion& x,
                                       const Quaternion& q,
                                       const DiffOptions& options) {
  const StructuralSet& psi = StructuralSet::cimmino();
  return psi_coords(apply(OperatorKind::left(q), f, x, psi, options), psi).c;
}

}  // namespace hyperholo
