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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hyperholo {

struct Residual {
  std::string label;
  double value = 0.0;
  /// Falls back to the report tolerance when unset.
  std::optional<double> tolerance;
  /// Lower bound instead of upper bound (negative controls, ratios).
  bool at_least = false;

  bool ok(double fallback) const;
};

/// Outcome of one verification: pass iff every residual meets its bound.
struct Report {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Residual> residuals;
  double tolerance = 0.0;
  bool pass = false;
  nlohmann::json errata = nlohmann::json::array();
  nlohmann::json diagnostics = nlohmann::json::object();
  std::optional<double> runtime_ms;

  Report() = default;
  Report(std::string n, double tol) : name(std::move(n)), tolerance(tol) {}

  Report& add(std::string label, double value);
  Report& add(std::string label, double value, double tolerance);
  Report& add_lower_bound(std::string label, double value, double bound);
  /// Recomputes `pass` from the residuals; an empty list fails.
  Report& finalize();
  /// Largest residual carrying the default tolerance (0 if none).
  double worst() const;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
};

}  // namespace hyperholo
