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

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperholo/numerics.hpp"
#include "hyperholo/report.hpp"

namespace hyperholo {

using Components = std::array<double, 4>;

/// Real-bilinear map R^4 x R^4 -> R^4; component identities are these.
using Bilinear = std::function<Components(const Components&, const Components&)>;

/// coefficients[m][i][j] multiplies u_i v_j in output line m.
using CoefficientTensor = std::array<std::array<std::array<double, 4>, 4>, 4>;

struct Candidate {
  std::string name;
  Bilinear form;
};

/// A printed four-line component display, transcribed term by term as
/// "+u0v0 -u1v1 ..." (u and v name the two factor families).
struct PrintedTable {
  std::string name;
  std::string u_symbol;
  std::string v_symbol;
  std::array<std::string, 4> lines;
  /// Generated alternatives; the first is the one the library implements.
  std::vector<Candidate> candidates;
};

/// Throws InvalidArgument on malformed terms.
CoefficientTensor parse_table(const std::array<std::string, 4>& lines);

/// Coefficients of a bilinear map by evaluation on basis pairs.
CoefficientTensor probe(const Bilinear& form);

/// "+u0v0 -u1v1" style rendering of one output line.
std::string render_line(const CoefficientTensor& t, int line,
                        const std::string& u = "u",
                        const std::string& v = "v");

struct LineDiff {
  int line = 0;
  std::string printed;
  std::string generated;
  std::vector<std::string> printed_only;
  std::vector<std::string> generated_only;
};

struct CandidateScore {
  std::string name;
  int mismatched_terms = 0;
  double sample_discrepancy = 0.0;  // max over random (u, v) and lines
};

struct TableComparison {
  std::string table;
  std::vector<CandidateScore> scores;
  std::string best;         // fewest mismatched terms (first on ties)
  std::vector<LineDiff> diffs;  // against `best`, mismatching lines only
  int primary_mismatches = 0;
};

TableComparison compare(const PrintedTable& table, Rng& rng, int samples = 64);

/// Every transcribed display: the Cimmino system (both sides), its
/// variable-perturbation variant, the Cauchy theorem and formula
/// components, the kernel-surface products, the pullback and conformal
/// isometry components, the CB bilinear form and the reproducing formula.
std::vector<PrintedTable> printed_tables();

nlohmann::json to_json(const TableComparison& c);

/// Compares all tables and lists every mismatch as an erratum. Passes once
/// every table has been compared, whatever the mismatch count.
Report errata_check(std::uint64_t seed = 1, int samples = 64);

}  // namespace hyperholo
