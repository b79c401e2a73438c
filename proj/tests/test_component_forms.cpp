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

#include <algorithm>

#include "doctest.h"

#include "hyperholo/component_forms.hpp"
#include "hyperholo/error.hpp"
#include "hyperholo/quaternion.hpp"

using namespace hyperholo;

namespace {

const nlohmann::json* erratum(const Report& r, const std::string& table, int line) {
  for (const auto& e : r.errata) {
    if (e.at("table") == table && e.value("kind", "") == "term" && e.at("line") == line) return &e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("parsing") {
  const auto t = parse_table({"+u0v0 -u1v1", "", "+u3v2 +u3v2", "-u0v3"});
  CHECK(t[0][0][0] == 1.0);
  CHECK(t[0][1][1] == -1.0);
  CHECK(t[2][3][2] == 2.0);
  CHECK(t[3][0][3] == -1.0);
  CHECK_THROWS_AS(parse_table({"u0v0", "", "", ""}), InvalidArgument);
  CHECK_THROWS_AS(parse_table({"+u4v0", "", "", ""}), InvalidArgument);
  CHECK(render_line(t, 0, "a", "b") == "+a0b0 -a1b1");
  CHECK(render_line(t, 2) == "+2u3v2");
  CHECK(render_line(t, 1) == "0");
}

TEST_CASE("probing the Hamilton product") {
  const Bilinear mul = [](const Components& u, const Components& v) {
    return (Quaternion{u[0], u[1], u[2], u[3]} * Quaternion{v[0], v[1], v[2], v[3]}).coords();
  };
  const auto t = probe(mul);
  const auto printed = parse_table({"+u0v0 -u1v1 -u2v2 -u3v3", "+u0v1 +u1v0 +u2v3 -u3v2",
                                    "+u0v2 -u1v3 +u2v0 +u3v1", "+u0v3 +u1v2 -u2v1 +u3v0"});
  CHECK(t == printed);
}

TEST_CASE("a clean table compares without differences") {
  PrintedTable table{"product", "a", "b",
                     {"+u0v0 -u1v1 -u2v2 -u3v3", "+u0v1 +u1v0 +u2v3 -u3v2",
                      "+u0v2 -u1v3 +u2v0 +u3v1", "+u0v3 +u1v2 -u2v1 +u3v0"},
                     {{"product", [](const Components& u, const Components& v) {
                        return (Quaternion{u[0], u[1], u[2], u[3]} *
                                Quaternion{v[0], v[1], v[2], v[3]}).coords();
                      }}}};
  Rng rng(1);
  const auto c = compare(table, rng);
  CHECK(c.primary_mismatches == 0);
  CHECK(c.diffs.empty());
  CHECK(c.scores[0].sample_discrepancy < 1e-12);
}

TEST_CASE("findings on the transcribed displays") {
  const Report r = errata_check(1);
  CHECK(r.pass);
  CHECK(r.diagnostics["tables"].size() == printed_tables().size());

  // Second line of the homogeneous part: the d2 f3 term has the wrong sign.
  const auto* lhs = erratum(r, "cimmino-system-lhs", 1);
  REQUIRE(lhs != nullptr);
  CHECK((*lhs)["printed_only"] == nlohmann::json::array({"+d2f3"}));
  CHECK((*lhs)["generated_only"] == nlohmann::json::array({"-d2f3"}));

  // Third line of the right-hand side: q0 multiplies f2, not f3.
  const auto* rhs = erratum(r, "cimmino-system-rhs", 2);
  REQUIRE(rhs != nullptr);
  CHECK((*rhs)["printed_only"] == nlohmann::json::array({"-q0f3"}));
  CHECK((*rhs)["generated_only"] == nlohmann::json::array({"-q0f2"}));

  const auto* thm = erratum(r, "cauchy-theorem-components", 2);
  REQUIRE(thm != nullptr);
  CHECK((*thm)["generated_only"] == nlohmann::json::array({"-dx3f1"}));

  const auto* formula = erratum(r, "cauchy-formula-components", 2);
  REQUIRE(formula != nullptr);
  CHECK((*formula)["generated_only"] == nlohmann::json::array({"+Ks3f1"}));

  // Clean tables.
  CHECK(erratum(r, "kernel-surface-products", 0) == nullptr);
  for (int m = 0; m < 4; ++m) {
    CHECK(erratum(r, "pullback-components", m) == nullptr);
    CHECK(erratum(r, "reproducing-formula", m) == nullptr);
  }

  // The printed right-hand side has the sign of D f = q f.
  bool sign_convention = false;
  for (const auto& e : r.errata) {
    if (e.at("table") == "cimmino-system-rhs" && e.value("kind", "") == "convention") {
      sign_convention = true;
      CHECK(e.at("implemented_mismatches") == 16);
    }
  }
  CHECK(sign_convention);
}

TEST_CASE("errata are deterministic") {
  CHECK(errata_check(5).to_json() == errata_check(5).to_json());
}
