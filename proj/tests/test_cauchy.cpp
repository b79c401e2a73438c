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

#include <cmath>

#include "doctest.h"

#include "hyperholo/cauchy.hpp"
#include "hyperholo/error.hpp"

using namespace hyperholo;

namespace {

const StructuralSet& cim() { return StructuralSet::cimmino(); }
const Resolution kRes{};

}  // namespace

TEST_CASE("Stokes identity") {
  const Domain4 ball = Domain4::unit_ball();
  const Report trivial = stokes_check(constant_field(1.0), constant_field(1.0), {}, cim(), ball, kRes);
  CHECK(trivial.pass);
  CHECK(trivial.residuals.front().value <= 1e-10);

  Rng rng(6);
  const Quaternion q{0.3, -0.2, 0.5, 0.1};
  const Domain4 box = Domain4::box({-0.5, -0.5, -0.5, -0.5}, {0.5, 0.7, 0.4, 0.5});
  for (const Domain4* d : {&ball, &box}) {
    const QuaternionField f = random_polynomial(rng);
    const QuaternionField g = random_polynomial(rng);
    const Report r = stokes_check(f, g, q, cim(), *d, kRes);
    CHECK(r.pass);
    CHECK(r.residuals.front().value <= 1e-6);
  }
  // 1 and a left solution: the volume side reduces to q times the integral.
  const QuaternionField g = exp_modulate(fueter_variable(1, cim()), q, cim());
  const StokesSides s = stokes_sides(constant_field(1.0), g, q, cim(), ball, kRes);
  CHECK(max_abs_diff(s.boundary, s.volume) < 1e-10);
}

TEST_CASE("boundary integral of solutions") {
  const Domain4 ball = Domain4::unit_ball();
  const QuaternionField one = constant_field(1.0);
  const Report r0 = cauchy_theorem_check(one, {}, cim(), ball, kRes);
  CHECK(r0.pass);

  // For q != 0 the nu_q-integral of a solution is q times its weighted volume
  // integral, and the e^{<q,x>} sigma integral is the one that vanishes.
  const Quaternion q{0.4, 0.1, -0.3, 0.2};
  for (int k = 0; k <= 3; ++k) {
    const QuaternionField g = k == 0 ? one : fueter_variable(k, cim());
    const QuaternionField f = exp_modulate(g, q, cim());
    const TheoremIntegral t = cauchy_theorem_integral(f, q, cim(), ball, kRes);
    CHECK(norm(t.integral) == doctest::Approx(t.stokes_prediction).epsilon(1e-9));
    CHECK(t.exp_weight_residual < 1e-12);
  }
  const TheoremIntegral t0 =
      cauchy_theorem_integral(exp_modulate(one, q, cim()), q, cim(), ball, kRes);
  CHECK(norm(t0.integral) > 1e-2);

  // Negative control: e1 is not a solution for q = 1.
  const Report bad = cauchy_theorem_check(constant_field(kE1), Quaternion(1.0), cim(), ball, kRes);
  CHECK_FALSE(bad.pass);
  CHECK(bad.residuals.front().value >= 1e-3);
}

TEST_CASE("Cauchy formula") {
  const Domain4 ball = Domain4::unit_ball();
  const QuaternionField one = constant_field(1.0);
  CHECK(max_abs_diff(cauchy_reconstruct(one, {}, cim(), ball, {}, kRes), Quaternion(1.0)) < 1e-8);
  CHECK(norm(cauchy_reconstruct(one, {}, cim(), ball, Quaternion{0, 2.5, 0, 0}, kRes)) < 1e-6);
  CHECK_THROWS_AS(cauchy_reconstruct(one, {}, cim(), ball, Quaternion(0.9), kRes),
                  BoundaryDistanceError);

  const Quaternion q{-0.2, 0.3, 0.4, -0.1};
  const QuaternionField f = exp_modulate(fueter_variable(2, cim()), q, cim());
  const CauchyIntegrator integ(ball, kRes, cim());
  Rng rng(14);
  for (int i = 0; i < 10; ++i) {
    const Quaternion x = rng.in_ball({}, 0.5);
    CHECK(max_abs_diff(integ.reconstruct(f, q, x), f(x)) < 1e-6);
  }
}

TEST_CASE("reconstruction jumps across the boundary") {
  const Domain4 ball = Domain4::unit_ball();
  const QuaternionField one = constant_field(1.0);
  const Quaternion dir{0.5, 0.5, 0.5, 0.5};
  const Quaternion inside =
      cauchy_reconstruct(one, {}, cim(), ball, 0.6 * dir, kRes);
  const Quaternion outside =
      cauchy_reconstruct(one, {}, cim(), ball, 2.4 * dir, kRes);
  CHECK(max_abs_diff(inside, Quaternion(1.0)) < 1e-6);
  CHECK(norm(outside) < 1e-6);
}

TEST_CASE("formula check on a box") {
  const Domain4 box = Domain4::box({-1, -1, -1, -1}, {1, 1, 1, 1});
  const Quaternion q{0.3, 0.0, 0.2, 0.1};
  Rng rng(1);
  std::vector<Quaternion> in, out;
  for (int i = 0; i < 5; ++i) in.push_back(rng.in_ball({}, 0.5));
  for (int i = 0; i < 5; ++i) out.push_back(rng.in_shell({}, 3.0, 3.5));
  const Report r = cauchy_formula_check(exp_modulate(constant_field(1.0), q, cim()), q,
                                        cim(), box, in, out, Resolution{24, 24, 48, 24, 20});
  CHECK(r.pass);
}
