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
#include <string>

#include "doctest.h"

#include "hyperholo/hyperholo.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hh_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("quaternion arithmetic") {
  const hh_quat i{{0, 1, 0, 0}};
  const hh_quat j{{0, 0, 1, 0}};
  const hh_quat k = hh_quat_mul(i, j);
  CHECK(k.q[3] == 1.0);
  CHECK(hh_quat_conj(k).q[3] == -1.0);
  CHECK(hh_quat_norm(hh_quat{{1, 1, 1, 1}}) == 2.0);
  hh_quat inv;
  CHECK(hh_quat_inverse(hh_quat{{0, 0, 0, 0}}, &inv) == HH_ZERO_DIVISOR);
  CHECK(std::string(hh_last_error()).size() > 0);
  CHECK(hh_quat_inverse(hh_quat{{2, 0, 0, 0}}, &inv) == HH_OK);
  CHECK(inv.q[0] == 0.5);
}

TEST_CASE("structural sets") {
  hh_psi* psi = nullptr;
  REQUIRE(hh_psi_from_json("\"cimmino\"", &psi) == HH_OK);
  CHECK(hh_psi_sign(psi) == -1);
  double c[4];
  REQUIRE(hh_psi_coords(psi, hh_quat{{1, 2, 3, 4}}, c) == HH_OK);
  CHECK(c[2] == -3.0);
  hh_psi_free(psi);
  const hh_quat bad[4] = {{{1, 0, 0, 0}}, {{1, 0, 0, 0}}, {{0, 0, 1, 0}}, {{0, 0, 0, 1}}};
  CHECK(hh_psi_create(bad, &psi) == HH_INVALID_ARGUMENT);
}

TEST_CASE("kernel fields are annihilated") {
  hh_psi* psi = nullptr;
  REQUIRE(hh_psi_from_json("\"cimmino\"", &psi) == HH_OK);
  const hh_quat q{{0.3, -0.2, 0.1, 0.4}};
  hh_field* f = nullptr;
  REQUIRE(hh_field_kernel(hh_quat{{2, 0, 0, 0}}, q, psi, &f) == HH_OK);
  hh_quat out;
  REQUIRE(hh_field_apply(f, HH_LEFT, q, psi, hh_quat{{0.1, 0.2, -0.3, 0.1}}, 0.0, &out) == HH_OK);
  for (double v : out.q) CHECK(std::abs(v) < 1e-12);
  hh_field_free(f);

  hh_field* z = nullptr;
  REQUIRE(hh_field_fueter_variable(2, psi, &z) == HH_OK);
  REQUIRE(hh_field_apply(z, HH_LEFT, hh_quat{{0, 0, 0, 0}}, psi, hh_quat{{0.5, 0.1, 0.2, 0.3}}, 1e-4,
                         &out) == HH_OK);
  for (double v : out.q) CHECK(std::abs(v) < 1e-8);
  char* label = nullptr;
  REQUIRE(hh_field_label(z, &label) == HH_OK);
  CHECK(!take(label).empty());
  hh_field_free(z);
  hh_psi_free(psi);
}

TEST_CASE("domain, reconstruction") {
  hh_domain* d = nullptr;
  REQUIRE(hh_domain_from_json(R"({"type": "ball", "center": [0,0,0,0], "radius": 1})", &d) == HH_OK);
  int inside = 0;
  REQUIRE(hh_domain_contains(d, hh_quat{{0.5, 0, 0, 0}}, &inside) == HH_OK);
  CHECK(inside == 1);
  hh_psi* psi = nullptr;
  REQUIRE(hh_psi_from_json("\"cimmino\"", &psi) == HH_OK);
  const hh_quat q{{0.2, 0.1, 0.0, -0.1}};
  hh_field *one = nullptr, *g = nullptr;
  REQUIRE(hh_field_constant(hh_quat{{1, 0, 0, 0}}, &one) == HH_OK);
  REQUIRE(hh_field_exp_modulate(one, q, psi, &g) == HH_OK);
  hh_quat x{{0.1, 0.2, 0.0, -0.1}}, rec, val;
  REQUIRE(hh_cauchy_reconstruct(g, q, psi, d, x, nullptr, &rec) == HH_OK);
  REQUIRE(hh_field_eval(g, x, &val) == HH_OK);
  for (int i = 0; i < 4; ++i) CHECK(rec.q[i] == doctest::Approx(val.q[i]).epsilon(1e-8).scale(1.0));
  hh_field_free(one);
  hh_field_free(g);
  hh_psi_free(psi);
  hh_domain_free(d);
}

TEST_CASE("dictionary and kernel handles") {
  hh_dictionary* dict = nullptr;
  REQUIRE(hh_dictionary_from_json(R"({"psi": "cimmino", "q": [0.1, 0, 0, 0], "poles": [], "degree_one": true})",
                                  &dict) == HH_OK);
  CHECK(hh_dictionary_size(dict) == 4);
  char* js = nullptr;
  REQUIRE(hh_dictionary_to_json(dict, &js) == HH_OK);
  CHECK(take(js).find("degree_one") != std::string::npos);
  hh_domain* d = nullptr;
  REQUIRE(hh_domain_from_json(R"({"type": "ball", "center": [0,0,0,0], "radius": 1})", &d) == HH_OK);
  hh_subspace_kernel* k = nullptr;
  REQUIRE(hh_subspace_kernel_create(dict, d, nullptr, &k) == HH_OK);
  CHECK(hh_subspace_kernel_rank(k) == 4);
  hh_quat b;
  REQUIRE(hh_subspace_kernel_eval(k, hh_quat{{0.1, 0, 0, 0}}, hh_quat{{0.1, 0, 0, 0}}, &b) == HH_OK);
  CHECK(b.q[0] > 0.0);
  hh_subspace_kernel_free(k);
  hh_domain_free(d);
  hh_dictionary_free(dict);
  CHECK(hh_dictionary_from_json("{", &dict) != HH_OK);
}

TEST_CASE("moebius handles") {
  hh_moebius* t = nullptr;
  CHECK(hh_moebius_create(hh_quat{{1, 0, 0, 0}}, hh_quat{{1, 0, 0, 0}}, hh_quat{{1, 0, 0, 0}},
                          hh_quat{{1, 0, 0, 0}}, &t) == HH_INVALID_ARGUMENT);
  REQUIRE(hh_moebius_create(hh_quat{{1, 0, 0, 0}}, hh_quat{{0, 1, 0, 0}}, hh_quat{{0, 0, 0, 0}},
                            hh_quat{{1, 0, 0, 0}}, &t) == HH_OK);
  hh_quat y, x;
  REQUIRE(hh_moebius_apply(t, hh_quat{{0.5, 0, 0, 0}}, &y) == HH_OK);
  CHECK(y.q[1] == 1.0);
  REQUIRE(hh_moebius_inverse(t, y, &x) == HH_OK);
  CHECK(x.q[0] == doctest::Approx(0.5));
  hh_moebius_free(t);
}

TEST_CASE("checks through the C interface") {
  char* out = nullptr;
  REQUIRE(hh_list_checks(&out) == HH_OK);
  CHECK(take(out).find("bergman-kernel") != std::string::npos);
  int pass = 0;
  REQUIRE(hh_run_check("algebra", nullptr, &out, &pass) == HH_OK);
  CHECK(pass == 1);
  take(out);
  CHECK(hh_run_check("nope", nullptr, &out, &pass) == HH_INVALID_ARGUMENT);
  CHECK(hh_parse_config("{\"checks\": [1]}", &out) == HH_CONFIG);
  int all = 0;
  REQUIRE(hh_run_config(R"({"checks": ["algebra", "errata"]})", 2, 0, &out, &all) == HH_OK);
  const std::string reports = take(out);
  CHECK(all == 1);
  REQUIRE(hh_summary(reports.c_str(), "csv", &out) == HH_OK);
  CHECK(take(out).find("errata,") != std::string::npos);
  CHECK(hh_summary(reports.c_str(), "xml", &out) == HH_INVALID_ARGUMENT);
}
