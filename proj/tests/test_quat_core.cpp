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
#include <sstream>

#include "doctest.h"

#include "hyperholo/error.hpp"
#include "hyperholo/numerics.hpp"
#include "hyperholo/quaternion.hpp"
#include "hyperholo/structural_set.hpp"

using namespace hyperholo;

namespace {

bool close(const Quaternion& a, const Quaternion& b, double tol = 1e-14) {
  return max_abs_diff(a, b) <= tol;
}

}  // namespace

TEST_CASE("unit relations") {
  CHECK(kE1 * kE2 == kE3);
  CHECK(kE2 * kE3 == kE1);
  CHECK(kE3 * kE1 == kE2);
  CHECK(kE2 * kE1 == -kE3);
  for (const auto& e : {kE1, kE2, kE3}) CHECK(e * e == Quaternion(-1.0));
}

TEST_CASE("products by hand") {
  const Quaternion q{0.3, -1.2, 2.0, 0.7};
  CHECK(q * Quaternion(1.0) == q);
  CHECK(Quaternion(1.0) * q == q);
  CHECK((Quaternion(1.0) + kE1) * (Quaternion(1.0) - kE1) == Quaternion(2.0));
}

TEST_CASE("conjugate, norm and inverse") {
  CHECK(conj(kE1) == -kE1);
  CHECK(norm(kE1) == doctest::Approx(1.0));
  CHECK(close(inverse(kE1), -kE1));
  CHECK(norm(Quaternion{1, 1, 1, 1}) == doctest::Approx(2.0));
  CHECK(inverse(Quaternion(2.0)) == Quaternion(0.5));
  CHECK_THROWS_AS(inverse(Quaternion{}), ZeroDivisorError);
}

TEST_CASE("algebra properties on random samples") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Quaternion a = rng.normal_quaternion();
    const Quaternion b = rng.normal_quaternion();
    const Quaternion c = rng.normal_quaternion();
    CHECK(close((a * b) * c, a * (b * c), 1e-12 * norm(a) * norm(b) * norm(c)));
    CHECK(close(a * (b + c), a * b + a * c, 1e-12 * norm(a) * (norm(b) + norm(c))));
    CHECK(norm(a * b) == doctest::Approx(norm(a) * norm(b)).epsilon(1e-13));
    CHECK(close(conj(a * b), conj(b) * conj(a), 1e-12 * norm(a) * norm(b)));
    CHECK(close(a * conj(a), Quaternion(norm2(a)), 1e-12 * norm2(a)));
    CHECK(close(a * inverse(a), Quaternion(1.0), 1e-13));
  }
}

TEST_CASE("printing") {
  std::ostringstream s;
  s << Quaternion{1, -2, 0.5, 0};
  CHECK(s.str() == "(1, -2, 0.5, 0)");
}

TEST_CASE("the default structural set") {
  const auto& psi = StructuralSet::cimmino();
  CHECK(psi[0] == Quaternion(1.0));
  CHECK(psi[1] == kE1);
  CHECK(psi[2] == -kE2);
  CHECK(psi[3] == kE3);
  CHECK(psi.sign() == -1);
  CHECK(StructuralSet::standard().sign() == 1);
}

TEST_CASE("frames must be orthonormal") {
  CHECK_THROWS_AS(StructuralSet({Quaternion(1.0), kE1, kE1, kE3}), InvalidArgument);
  CHECK_THROWS_AS(StructuralSet({Quaternion(2.0), kE1, kE2, kE3}), InvalidArgument);
}

TEST_CASE("psi coordinates") {
  const auto& psi = StructuralSet::cimmino();
  const PsiCoords c = psi_coords(-kE2, psi);
  CHECK(c[0] == 0.0);
  CHECK(c[1] == 0.0);
  CHECK(c[2] == 1.0);
  CHECK(c[3] == 0.0);
  const PsiCoords one = psi_coords(Quaternion(1.0), psi);
  CHECK(one[0] == 1.0);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Quaternion q = rng.normal_quaternion();
    CHECK(close(from_psi_coords(psi_coords(q, psi), psi), q, 1e-14));
  }
}

TEST_CASE("pairing") {
  const auto& psi = StructuralSet::cimmino();
  CHECK(pairing(kE2, -kE2, psi) == doctest::Approx(-1.0));
  CHECK(pairing(Quaternion{}, kE1, psi) == 0.0);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    // Random frame u e_k v.
    const Quaternion u = rng.unit_quaternion();
    const Quaternion v = rng.unit_quaternion();
    std::array<Quaternion, 4> f;
    for (int k = 0; k < 4; ++k) f[static_cast<size_t>(k)] = u * Quaternion::unit(k) * v;
    const StructuralSet frame(f);
    const Quaternion q = rng.normal_quaternion();
    const Quaternion x = rng.normal_quaternion();
    CHECK(pairing(q, x, frame) ==
          doctest::Approx(pairing(q, x, StructuralSet::standard())).epsilon(1e-12));
    CHECK(pairing(q, x, frame) == doctest::Approx(dot(q, x)).epsilon(1e-12));
  }
}
