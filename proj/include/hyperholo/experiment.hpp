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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperholo/fields.hpp"
#include "hyperholo/geometry.hpp"
#include "hyperholo/moebius.hpp"
#include "hyperholo/report.hpp"

namespace hyperholo {

/// Everything a registered check reads. Defaults describe the unit ball
/// with q = r = 0.
struct CheckSettings {
  std::uint64_t seed = 1;
  StructuralSet psi = StructuralSet::cimmino();
  Domain4 domain = Domain4::unit_ball();
  Quaternion q;
  Quaternion r;
  MoebiusMap map = MoebiusMap::translation({0.3, -0.2, 0.1, 0.25});
  Resolution surface;                                   // boundary integrals
  Resolution volume{12, 12, 24, 12, 8};                 // inner products
  Resolution study{6, 6, 12, 6, 4};                     // doubling study
  /// Unset: two poles at 2.5 length scales from the centroid.
  std::optional<std::vector<Quaternion>> poles;
  bool degree_one = true;
  int interior_points = 20;
  int exterior_points = 10;
  int samples = 50;
  /// Per-check override of the check's main tolerance.
  std::map<std::string, double> tolerances;

  std::vector<Quaternion> effective_poles() const;
  double tolerance_for(const std::string& check, double fallback) const;
  nlohmann::json to_json() const;
};

struct ExperimentConfig {
  CheckSettings settings;
  std::vector<std::string> checks;
};

/// Parses config text. Syntax errors report line and column; semantic
/// errors name the offending field. Throws ConfigError.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig config_from_json(const nlohmann::json& j);

struct CheckInfo {
  std::string name;
  std::string description;
};

/// All verification names, in run order.
const std::vector<CheckInfo>& check_registry();
bool is_check(const std::string& name);

/// seed + stable_hash(name).
std::uint64_t check_seed(std::uint64_t seed, const std::string& name);

/// Runs one registered check; throws InvalidArgument for unknown names.
/// Errors raised inside the check become a failing report.
Report run_check(const std::string& name, const CheckSettings& settings);

struct RunOptions {
  int jobs = 1;
  bool timings = false;
};

/// Reports in the order of config.checks.
std::vector<Report> run_experiment(const ExperimentConfig& config,
                                   const RunOptions& options = {});

/// One line per report: name,pass,worst_residual_label,worst_value,tolerance.
std::string csv_summary(const std::vector<Report>& reports);
/// Aligned text table for terminals.
std::string text_summary(const std::vector<Report>& reports);

// Suites that have no natural home in a single module.

/// Quaternion axioms, norm multiplicativity, structural-set orthonormality
/// and sign, and psi-independence of the pairing on random samples.
Report algebra_check(std::uint64_t seed, int samples = 10000,
                     double tolerance = 1e-12);

struct OperatorSuiteOptions {
  int points = 100;
  double h = 1e-4;
  double tolerance = 1e-6;
  /// Steps of the halving study; large enough that truncation dominates.
  double study_h = 1e-2;
  double ratio_lo = 3.5;
  double ratio_hi = 4.5;
  /// Entries whose study residual is below this have no truncation error.
  double truncation_floor = 1e-10;
};

/// Finite-difference residual of the tagged operator on every dictionary
/// entry at random points, and the error ratio under halving of h.
Report operator_check(const Dictionary& dictionary, const Domain4& domain,
                      std::uint64_t seed,
                      const OperatorSuiteOptions& options = {});

/// Copies residuals of `from` into `into` with labels prefixed by `prefix/`,
/// keeping their effective tolerances.
void merge_into(Report& into, const Report& from, const std::string& prefix);

}  // namespace hyperholo
