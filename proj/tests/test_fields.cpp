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
#include "hyperholo/fields.hpp"
#include "hyperholo/operators.hpp"

using namespace hyperholo;

namespace {

const StructuralSet& cim() { return StructuralSet::cimmino(); }

double fd_left(const QuaternionField& f, const Quaternion& q, const Quaternion& x,
               const StructuralSet& psi) {
  const DiffOptions fd{1e-4, DerivativeMode::finite_difference, false};
  return norm(apply(OperatorKind::left(q), f, x, psi, fd)) / (1.0 + norm(f(x)));
}

}  // namespace

TEST_CASE("constant and identity fields") {
  const QuaternionField one = constant_field(1.0);
  CHECK(one.label() == "1");
  CHECK(one(Quaternion{0.3, 1, 2, 3}) == Quaternion(1.0));
  CHECK(one.annihilator() == Annihilator::psi_fueter_left);
  CHECK(identity_field()(kE2) == kE2);
  CHECK(squared_norm_field()(Quaternion{1, 1, 1, 1}) == Quaternion(4.0));
}

TEST_CASE("Fueter variables") {
  const auto& std_psi = StructuralSet::standard();
  const QuaternionField z1 = fueter_variable(1, std_psi);
  CHECK(z1(kE1) == Quaternion(1.0));
  // x_1 - e1 x_0 at x = 2 + 3 e1.
  CHECK(max_abs_diff(z1(Quaternion{2, 3, 0, 0}), Quaternion{3, -2, 0, 0}) < 1e-15);
  for (int k = 1; k <= 3; ++k) {
    CHECK(fueter_variable(k, cim())(Quaternion{}) == Quaternion{});
  }
  CHECK_THROWS_AS(fueter_variable(0, cim()), InvalidArgument);
  CHECK_THROWS_AS(fueter_variable(4, cim()), InvalidArgument);

  Rng rng(9);
  for (int k = 1; k <= 3; ++k) {
    const QuaternionField z = fueter_variable(k, cim());
    for (int i = 0; i < 100; ++i) {
      CHECK(fd_left(z, {}, rng.in_ball({}, 1.0), cim()) <= 1e-9);
    }
  }
}

TEST_CASE("closed-form partials agree with differences") {
  Rng rng(17);
  const QuaternionField p = random_polynomial(rng);
  const QuaternionField k = kernel_field(Quaternion{2.5, 0, 0, 0}, Quaternion{0.2, -0.1, 0.3, 0}, cim());
  const QuaternionField m = exp_modulate(fueter_variable(2, cim()), Quaternion{0.4, 0.1, -0.2, 0.3}, cim());
  for (const QuaternionField* f : {&p, &k, &m}) {
    for (int i = 0; i < 20; ++i) {
      const Quaternion x = rng.in_ball({}, 1.0);
      const Jacobian exact = f->partials(x);
      const Jacobian fd = partials(*f, x, {1e-5, DerivativeMode::finite_difference, false});
      for (size_t j = 0; j < 4; ++j) CHECK(max_abs_diff(exact[j], fd[j]) < 1e-7);
    }
  }
}

TEST_CASE("exponential modulation") {
  const Quaternion q{0.3, -0.5, 0.2, 0.6};
  const QuaternionField g = fueter_variable(3, cim());
  // q = 0 returns g itself.
  CHECK(exp_modulate(g, {}, cim()).label() == g.label());
  const QuaternionField f = exp_modulate(g, q, cim());
  const QuaternionField back = exp_modulate(f, -q, cim());
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const Quaternion x = rng.in_ball({}, 1.0);
    CHECK(max_abs_diff(back(x), g(x)) < 1e-14);
    CHECK(fd_left(f, q, x, cim()) <= 1e-6);
  }
  CHECK(f.annihilator() == Annihilator::q_psi_fueter_left);
  CHECK(f.perturbation() == q);
  // e^{-<q,x>} alone.
  const QuaternionField e = exp_modulate(constant_field(1.0), q, cim());
  const Quaternion x{0.1, 0.2, 0.3, 0.4};
  CHECK(e(x).q0 == doctest::Approx(std::exp(-dot(q, x))));
}

TEST_CASE("kernel fields") {
  const Quaternion pole{0, 0, 0, 0};
  const QuaternionField k = kernel_field(pole, {}, cim());
  CHECK(k(Quaternion(-1.0)).q0 == doctest::Approx(1.0 / (2 * M_PI * M_PI)));
  CHECK(k(Quaternion(-1.0)).q0 == doctest::Approx(0.0506606).epsilon(1e-6));
  CHECK_THROWS_AS(k(pole), SingularityError);
  const Quaternion q{0.5, 0.1, -0.3, 0.2};
  const QuaternionField kq = kernel_field(Quaternion{2.5, 0, 0, 0}, q, cim());
  Rng rng(21);
  for (int i = 0; i < 100; ++i) CHECK(fd_left(kq, q, rng.in_ball({}, 1.0), cim()) <= 1e-6);
}

TEST_CASE("combinations") {
  const std::vector<QuaternionField> fs = {constant_field(1.0), fueter_variable(1, cim())};
  const std::vector<Quaternion> cs = {kE2, Quaternion(2.0)};
  const QuaternionField c = right_combination(fs, cs);
  const Quaternion x{0.5, 0.25, 0, 0};
  CHECK(max_abs_diff(c(x), kE2 + fs[1](x) * 2.0) < 1e-15);
  CHECK(c.annihilator() == Annihilator::psi_fueter_left);
  const QuaternionField d = difference(fs[1], fs[1]);
  CHECK(d(x) == Quaternion{});
}

TEST_CASE("certification") {
  CertificationOptions o;
  const auto good = certify(fueter_variable(1, cim()), cim(), o);
  CHECK(good.pass);
  CHECK(good.max_residual <= 1e-9);
  // The identity is not annihilated; a wrong tag must be caught.
  const QuaternionField liar =
      identity_field().retagged(Annihilator::psi_fueter_left, {});
  const auto bad = certify(liar, cim(), o);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_residual > 0.1);
}

TEST_CASE("dictionaries") {
  const auto d0 = build_dictionary(cim(), {}, {}, true);
  REQUIRE(d0.size() == 4);
  CHECK(d0[0].label() == "1");
  const Quaternion q{0.2, 0.4, -0.1, 0.3};
  const auto e = build_dictionary(cim(), q, {}, false);
  REQUIRE(e.size() == 1);
  CHECK(e[0](Quaternion{}) == Quaternion(1.0));

  const std::vector<Quaternion> poles = {Quaternion{2.5, 0, 0, 0}, Quaternion{0, 0, -2.5, 0}};
  const auto d = build_dictionary(cim(), q, poles, true);
  CHECK(d.size() == 6);
  Rng rng(2);
  for (const auto& f : d.entries) {
    for (int i = 0; i < 100; ++i) CHECK(fd_left(f, q, rng.in_ball({}, 1.0), cim()) <= 1e-6);
  }
  const auto j = to_json(d);
  const auto back = dictionary_from_json(j);
  CHECK(back.size() == d.size());
  CHECK(back.q == d.q);
  for (size_t i = 0; i < d.size(); ++i) CHECK(back[i].label() == d[i].label());
}

TEST_CASE("json helpers") {
  CHECK(quaternion_from_json(nlohmann::json(2.0)) == Quaternion(2.0));
  CHECK(quaternion_from_json(nlohmann::json::parse("[0,1,0,0]")) == kE1);
  CHECK_THROWS(quaternion_from_json(nlohmann::json::parse("[0,1]")));
  CHECK(structural_set_from_json("cimmino") == cim());
  CHECK(structural_set_from_json(to_json(cim())) == cim());
}
