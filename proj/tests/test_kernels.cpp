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

#include "hyperholo/error.hpp"
#include "hyperholo/geometry.hpp"
#include "hyperholo/kernels.hpp"

using namespace hyperholo;

namespace {

const double kTwoPiSq = 2.0 * M_PI * M_PI;
const StructuralSet& cim() { return StructuralSet::cimmino(); }

}  // namespace

TEST_CASE("substitution values") {
  const auto& std_psi = StructuralSet::standard();
  const Quaternion x{0.1, 0.2, 0.3, 0.4};
  CHECK(cauchy_kernel(x + 1.0, x, cim()).q0 == doctest::Approx(1.0 / kTwoPiSq));
  CHECK(cauchy_kernel(Quaternion(1.0), {}, cim()).q0 == doctest::Approx(0.0506606).epsilon(1e-6));
  CHECK(max_abs_diff(cauchy_kernel(kE1, {}, std_psi), (-1.0 / kTwoPiSq) * kE1) < 1e-16);
  CHECK(norm(cauchy_kernel(Quaternion{0, 0, 2, 0}, {}, cim())) ==
        doctest::Approx(std::pow(2.0, -3) / kTwoPiSq));
  CHECK_THROWS_AS(cauchy_kernel(x, x, cim()), SingularityError);
}

TEST_CASE("perturbed kernel") {
  const Quaternion x{0.1, -0.2, 0.3, 0.0};
  const Quaternion y{0.7, 0.4, -0.5, 1.1};
  CHECK(cauchy_kernel_q(y, x, {}, cim()) == cauchy_kernel(y, x, cim()));
  CHECK(cauchy_kernel_q(x + 1.0, x, Quaternion(1.0), cim()).q0 ==
        doctest::Approx(std::exp(1.0) / kTwoPiSq));
  const Quaternion q{0.3, 0.1, 0.2, -0.4};
  const auto c = kernel_components(y, x, q, cim());
  const Quaternion k = cauchy_kernel_q(y, x, q, cim());
  CHECK(max_abs_diff(Quaternion{c[0], c[1], c[2], c[3]}, k) == 0.0);
  const KernelValue v = evaluate_kernel(y, x, q, cim());
  CHECK(v.value == k);
}

TEST_CASE("surface pairing") {
  const Quaternion x{};
  CHECK(kernel_surface_pairing(Quaternion(1.0), x, {}, Quaternion(1.0), cim()).q0 ==
        doctest::Approx(1.0 / kTwoPiSq));
  const Quaternion y{0.3, 1.0, -0.2, 0.5};
  const Quaternion n = Quaternion{0.0, 0.6, 0.0, 0.8};
  const Quaternion q{0.2, 0.2, 0.1, 0.0};
  CHECK(max_abs_diff(kernel_surface_pairing(y, x, q, n, cim()),
                     cauchy_kernel_q(y, x, q, cim()) * surface_element(n, cim())) < 1e-16);
}

TEST_CASE("two-sided hyperholomorphy away from the pole") {
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const Quaternion q = 0.7 * rng.quaternion();
    const Quaternion x = rng.in_ball({}, 0.5);
    const Quaternion y = rng.in_shell({}, 1.0, 1.5);
    const auto h = kernel_hyperholomorphy(y, x, q, cim());
    CHECK(h.left_in_x < 1e-6);
    CHECK(h.right_in_x < 1e-6);
    CHECK(h.left_in_y < 1e-6);
    CHECK(h.right_in_y < 1e-6);
  }
  // In y with +q the right operator does not annihilate the kernel.
  const auto h = kernel_hyperholomorphy(Quaternion(1.2), {}, Quaternion{0.5, 0, 0, 0}, cim());
  CHECK(h.right_in_y_plus_q > 1e-3);
}
