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

#include <string>

#include "doctest.h"

#include "hyperholo/error.hpp"
#include "hyperholo/experiment.hpp"

using namespace hyperholo;

TEST_CASE("config validation") {
  CHECK_THROWS_AS(parse_config(R"({"checks": ["nope"]})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"checks": ["stokes"], "colour": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"checks": ["stokes"], "tolerances": {"stokes": 0}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"checks": ["stokes"], "tolerances": {"stokes": -1}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"checks": ["stokes"], "dictionary": {"poles": [[0.1, 0, 0, 0]]}})"),
                  ConfigError);
  try {
    parse_config("{\n  \"checks\": [\"stokes\",]\n}");
    FAIL("expected a parse error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_config(R"({"checks": ["stokes"], "colour": 1})");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("colour") != std::string::npos);
  }
}

TEST_CASE("config round trip") {
  const auto cfg = parse_config(R"({
    "seed": 9, "q": [0.1, 0, 0.2, 0], "domain": {"type": "box", "lo": [0,0,0,0], "hi": [1,1,1,1]},
    "checks": ["algebra", "stokes"], "tolerances": {"stokes": 1e-6}})");
  CHECK(cfg.settings.seed == 9);
  CHECK(cfg.checks.size() == 2);
  CHECK(!cfg.settings.domain.is_ball());
  CHECK(cfg.settings.tolerance_for("stokes", 1.0) == 1e-6);
  CHECK(cfg.settings.tolerance_for("algebra", 1.0) == 1.0);
  nlohmann::json j = cfg.settings.to_json();
  j["checks"] = cfg.checks;
  const auto again = config_from_json(j);
  CHECK(again.settings.to_json() == cfg.settings.to_json());
}

TEST_CASE("registry and seeds") {
  CHECK(is_check("cauchy-theorem"));
  CHECK(!is_check("cauchy"));
  CHECK(check_registry().size() >= 10);
  CHECK(check_seed(1, "stokes") != check_seed(1, "algebra"));
  CHECK(check_seed(1, "stokes") == check_seed(1, "stokes"));
  CHECK(check_seed(2, "stokes") == check_seed(1, "stokes") + 1);
}

TEST_CASE("a check passes and fails on tolerance") {
  CheckSettings s;
  const Report ok = run_check("cauchy-theorem", s);
  CHECK(ok.pass);
  CHECK(ok.params["check_seed"] == check_seed(s.seed, "cauchy-theorem"));
  s.tolerances["cauchy-theorem"] = 1e-30;
  const Report bad = run_check("cauchy-theorem", s);
  CHECK(!bad.pass);
}

TEST_CASE("errors become failing reports") {
  CheckSettings s;
  // Settings built in code skip config validation; a pole inside the domain
  // fails certification.
  s.poles = std::vector<Quaternion>{Quaternion{}};
  const Report r = run_check("bergman-kernel", s);
  CHECK(!r.pass);
  CHECK(r.diagnostics.contains("error"));
  CHECK(r.diagnostics["error_code"] == 6);
}

TEST_CASE("determinism across job counts") {
  const auto cfg = parse_config(R"({"checks": ["algebra", "errata", "inclusion", "covariance"]})");
  const auto a = run_experiment(cfg, {1, false});
  const auto b = run_experiment(cfg, {4, false});
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == cfg.checks[i]);
    CHECK(a[i].to_json().dump() == b[i].to_json().dump());
    CHECK(!a[i].runtime_ms);
  }
  const auto t = run_experiment(cfg, {2, true});
  CHECK(t[0].runtime_ms.has_value());
}

TEST_CASE("summaries") {
  const auto cfg = parse_config(R"({"checks": ["algebra"]})");
  const auto reps = run_experiment(cfg);
  const std::string csv = csv_summary(reps);
  CHECK(csv.rfind("name,pass,worst_residual,value,bound\n", 0) == 0);
  CHECK(csv.find("algebra,") != std::string::npos);
  CHECK(text_summary(reps).find("algebra") != std::string::npos);
}

TEST_CASE("merge_into prefixes labels") {
  Report a("outer", 1e-3);
  Report b("inner", 1e-6);
  b.add("x", 1e-7);
  b.finalize();
  merge_into(a, b, "in");
  a.finalize();
  REQUIRE(a.residuals.size() == 1);
  CHECK(a.residuals[0].label == "in/x");
  CHECK(a.residuals[0].tolerance == 1e-6);
  CHECK(a.pass);
}
