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

#include "hyperholo/report.hpp"

#include <algorithm>
#include <cmath>

namespace hyperholo {

bool Residual::ok(double fallback) const {
  const double bound = tolerance.value_or(fallback);
  if (std::isnan(value)) return false;
  return at_least ? value >= bound : value <= bound;
}

Report& Report::add(std::string label, double value) {
  residuals.push_back({std::move(label), value, std::nullopt, false});
  return *this;
}

Report& Report::add(std::string label, double value, double tol) {
  residuals.push_back({std::move(label), value, tol, false});
  return *this;
}

Report& Report::add_lower_bound(std::string label, double value,
                                double bound) {
  residuals.push_back({std::move(label), value, bound, true});
  return *this;
}

Report& Report::finalize() {
  pass = !residuals.empty() &&
         std::all_of(residuals.begin(), residuals.end(),
                     [this](const Residual& r) { return r.ok(tolerance); });
  return *this;
}

double Report::worst() const {
  double w = 0.0;
  for (const auto& r : residuals) {
    if (!r.tolerance && !r.at_least) w = std::max(w, r.value);
  }
  return w;
}

namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

nlohmann::json Report::to_json() const {
  nlohmann::json res = nlohmann::json::array();
  for (const auto& r : residuals) {
    nlohmann::json e = {{"label", r.label}, {"value", number(r.value)}};
    if (r.tolerance) e["tolerance"] = *r.tolerance;
    if (r.at_least) e["bound"] = "lower";
    e["pass"] = r.ok(tolerance);
    res.push_back(e);
  }
  nlohmann::json j = {{"name", name},         {"params", params},
                      {"residuals", res},     {"tolerance", tolerance},
                      {"pass", pass},         {"errata", errata},
                      {"diagnostics", diagnostics}};
  j["runtime_ms"] = runtime_ms ? nlohmann::json(*runtime_ms) : nullptr;
  return j;
}

Report Report::from_json(const nlohmann::json& j) {
  Report r(j.at("name").get<std::string>(), j.value("tolerance", 0.0));
  r.params = j.value("params", nlohmann::json::object());
  for (const auto& e : j.value("residuals", nlohmann::json::array())) {
    Residual res;
    res.label = e.at("label").get<std::string>();
    res.value = e.at("value").is_number() ? e["value"].get<double>() : NAN;
    if (e.contains("tolerance")) res.tolerance = e["tolerance"].get<double>();
    res.at_least = e.value("bound", "") == "lower";
    r.residuals.push_back(res);
  }
  r.pass = j.value("pass", false);
  r.errata = j.value("errata", nlohmann::json::array());
  r.diagnostics = j.value("diagnostics", nlohmann::json::object());
  if (j.contains("runtime_ms") && j["runtime_ms"].is_number()) {
    r.runtime_ms = j["runtime_ms"].get<double>();
  }
  return r;
}

}  // namespace hyperholo
