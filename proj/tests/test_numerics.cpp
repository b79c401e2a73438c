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

#include <atomic>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "hyperholo/numerics.hpp"

using namespace hyperholo;

TEST_CASE("stable hash is FNV-1a") {
  CHECK(stable_hash("") == 0xcbf29ce484222325ULL);
  CHECK(stable_hash("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(stable_hash("stokes") != stable_hash("cauchy-theorem"));
}

TEST_CASE("rng streams are reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(norm(c.in_ball(Quaternion(1.0), 0.5) - Quaternion(1.0)) <= 0.5);
    const double r = norm(c.in_shell({}, 1.5, 2.0));
    CHECK(r >= 1.5 - 1e-12);
    CHECK(r <= 2.0 + 1e-12);
    CHECK(norm(c.unit_quaternion()) == doctest::Approx(1.0));
  }
}

TEST_CASE("pairwise sum") {
  std::vector<double> v(10001, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(1000.1).epsilon(1e-14));
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
  std::vector<Quaternion> q(7, kE2);
  CHECK(pairwise_sum(q) == 7.0 * kE2);
}

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 12, 24}) {
    const GaussRule g = gauss_legendre(n);
    REQUIRE(g.nodes.size() == static_cast<size_t>(n));
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += g.weights[static_cast<size_t>(i)] * std::pow(g.nodes[static_cast<size_t>(i)], p);
      const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("parallel_for covers every index once") {
  for (size_t n : {size_t{0}, size_t{1}, size_t{100}, size_t{100000}}) {
    std::vector<int> hits(n, 0);
    parallel_for(n, [&](size_t b, size_t e) {
      for (size_t i = b; i < e; ++i) ++hits[i];
    });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
}

TEST_CASE("parallel_for rethrows") {
  CHECK_THROWS(parallel_for(100000, [](size_t b, size_t) {
    if (b == 0) throw std::runtime_error("boom");
  }));
}
