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

#include "doctest.h"

#include "hyperholo/fields.hpp"
#include "hyperholo/operators.hpp"

using namespace hyperholo;

namespace {

const StructuralSet& cim() { return StructuralSet::cimmino(); }

// The inhomogeneous Cimmino system written out by hand, derivatives taken
// along the psi-coordinates, f in standard components, q in psi-coordinates.
// Returns lhs + rhs, which vanishes for solutions of D f + q f = 0.
std::array<double, 4> cimmino_by_hand(const QuaternionField& f,
                                      const Quaternion& x, const PsiCoords& qc) {
  const Jacobian jac = f.partials(x);
  // d_k = derivative along psi_k: psi_2 = -e2 flips the sign of d/dx_2.
  const double s[4] = {1, 1, -1, 1};
  double d[4][4];  // d[k][j] = d_k f_j
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) d[k][j] = s[k] * jac[static_cast<size_t>(k)][j];
  const Quaternion v = f(x);
  const double f0 = v.q0, f1 = v.q1, f2 = v.q2, f3 = v.q3;
  const double q0 = qc[0], q1 = qc[1], q2 = qc[2], q3 = qc[3];
  return {
      d[0][0] + d[2][2] - d[1][1] - d[3][3] + (q0 * f0 + q2 * f2 - q1 * f1 - q3 * f3),
      d[1][0] + d[0][1] - d[3][2] - d[2][3] + (q1 * f0 + q0 * f1 - q3 * f2 - q2 * f3),
      d[2][0] + d[1][3] - d[3][1] - d[0][2] + (q2 * f0 + q1 * f3 - q3 * f1 - q0 * f2),
      d[3][0] + d[2][1] + d[1][2] + d[0][3] + (q3 * f0 + q2 * f1 + q1 * f2 + q0 * f3),
  };
}

}  // namespace

TEST_CASE("hand values") {
  const Quaternion x{0.2, -0.4, 0.1, 0.7};
  const Quaternion q{0.5, 1.0, -2.0, 0.25};
  CHECK(apply(OperatorKind::left(q), constant_field(1.0), x, cim()) == q);
  CHECK(apply(OperatorKind::right(q), constant_field(kE1), x, cim()) == kE1 * q);
  CHECK(norm(apply(OperatorKind::left(), fueter_variable(1, cim()), x, cim())) < 1e-15);
  CHECK(apply(OperatorKind::left(), identity_field(), x, StructuralSet::standard()) ==
        Quaternion(-2.0));
}

TEST_CASE("Cimmino residual of constants") {
  const Quaternion x{0.3, 0.3, 0.3, 0.3};
  const auto r = cimmino_residual(constant_field(1.0), x, Quaternion(0.75));
  CHECK(r[0] == doctest::Approx(0.75));
  CHECK(r[1] == 0.0);
  CHECK(r[2] == 0.0);
  CHECK(r[3] == 0.0);
  const auto z = cimmino_residual(constant_field(kE1), x, {});
  for (double c : z) CHECK(c == 0.0);
}

TEST_CASE("Cimmino residual matches the system written by hand") {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const QuaternionField f = random_polynomial(rng);
    const Quaternion x = rng.in_ball({}, 1.0);
    const PsiCoords qc{{rng.normal(), rng.normal(), rng.normal(), rng.normal()}};
    const Quaternion q = from_psi_coords(qc, cim());
    const auto got = cimmino_residual(f, x, q, {1e-4, DerivativeMode::exact, false});
    const auto want = cimmino_by_hand(f, x, qc);
    for (size_t m = 0; m < 4; ++m) CHECK(got[m] == doctest::Approx(want[m]).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("dictionary entries solve the system") {
  const Quaternion q{0.1, -0.6, 0.3, 0.2};
  const std::vector<Quaternion> poles = {Quaternion{0, 2.5, 0, 0}};
  const auto d = build_dictionary(cim(), q, poles, true);
  Rng rng(8);
  for (const auto& f : d.entries) {
    for (int i = 0; i < 20; ++i) {
      const auto r = cimmino_residual(f, rng.in_ball({}, 1.0), q,
                                      {1e-4, DerivativeMode::finite_difference, false});
      for (double c : r) CHECK(std::abs(c) < 1e-7);
    }
  }
}

TEST_CASE("operator does not depend on the frame orientation") {
  // D |x|^2 = 2x and D(2x) = 2(1 + e1 e1 + e2 e2 + e3 e3) = -4 for any frame,
  // since each derivative is taken along its own frame vector.
  const QuaternionField d = operator_field(OperatorKind::left(), squared_norm_field(),
                                           StructuralSet::standard(),
                                           {1e-4, DerivativeMode::exact, false});
  const Quaternion x{0.1, 0.2, 0.3, 0.4};
  CHECK(max_abs_diff(d(x), 2.0 * x) < 1e-14);
  for (const StructuralSet& frame : {StructuralSet::standard(), StructuralSet::standard().conjugate(),
                                     cim()}) {
    const Quaternion dd = apply(OperatorKind::left(), d, x, frame,
                                {1e-3, DerivativeMode::finite_difference, false});
    CHECK(dd.q0 == doctest::Approx(-4.0).epsilon(1e-8));
    CHECK(norm(dd.vector_part()) < 1e-8);
  }
}

TEST_CASE("finite differences converge at second order") {
  const Quaternion q{0.4, 0.2, -0.3, 0.5};
  const QuaternionField f =
      exp_modulate(fueter_variable(1, cim()), q, cim()).without_partials();
  const Quaternion x{0.2, 0.1, -0.3, 0.4};
  const double r1 = norm(apply(OperatorKind::left(q), f, x, cim(),
                               {1e-2, DerivativeMode::finite_difference, false}));
  const double r2 = norm(apply(OperatorKind::left(q), f, x, cim(),
                               {5e-3, DerivativeMode::finite_difference, false}));
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.02));
  const double rr = norm(apply(OperatorKind::left(q), f, x, cim(),
                               {1e-2, DerivativeMode::finite_difference, true}));
  CHECK(rr < r2 / 10);
}
