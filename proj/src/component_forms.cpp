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

#include "hyperholo/component_forms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperholo/error.hpp"
#include "hyperholo/quaternion.hpp"
#include "hyperholo/structural_set.hpp"

namespace hyperholo {

CoefficientTensor parse_table(const std::array<std::string, 4>& lines) {
  CoefficientTensor t{};
  for (size_t m = 0; m < 4; ++m) {
    std::istringstream in(lines[m]);
    std::string term;
    while (in >> term) {
      // [+-]u<i>v<j>
      if (term.size() != 5 || (term[0] != '+' && term[0] != '-') ||
          term[1] != 'u' || term[3] != 'v' || term[2] < '0' || term[2] > '3' ||
          term[4] < '0' || term[4] > '3') {
        throw InvalidArgument("malformed term '" + term + "'");
      }
      const auto i = static_cast<size_t>(term[2] - '0');
      const auto j = static_cast<size_t>(term[4] - '0');
      t[m][i][j] += term[0] == '+' ? 1.0 : -1.0;
    }
  }
  return t;
}

CoefficientTensor probe(const Bilinear& form) {
  CoefficientTensor t{};
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = 0; j < 4; ++j) {
      Components u{};
      Components v{};
      u[i] = 1.0;
      v[j] = 1.0;
      const Components out = form(u, v);
      for (size_t m = 0; m < 4; ++m) {
        // Generated coefficients are integers; clean rounding residue.
        t[m][i][j] = std::round(out[m] * 1e12) / 1e12;
      }
    }
  }
  return t;
}

namespace {

std::string term_text(double c, size_t i, size_t j, const std::string& u,
                      const std::string& v) {
  std::ostringstream s;
  s << (c < 0 ? "-" : "+");
  if (std::fabs(std::fabs(c) - 1.0) > 1e-12) s << std::fabs(c);
  s << u << i << v << j;
  return s.str();
}

Components evaluate(const CoefficientTensor& t, const Components& u,
                    const Components& v) {
  Components out{};
  for (size_t m = 0; m < 4; ++m)
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) out[m] += t[m][i][j] * u[i] * v[j];
  return out;
}

int mismatches(const CoefficientTensor& a, const CoefficientTensor& b) {
  int n = 0;
  for (size_t m = 0; m < 4; ++m)
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j)
        if (std::fabs(a[m][i][j] - b[m][i][j]) > 1e-12) ++n;
  return n;
}

}  // namespace

std::string render_line(const CoefficientTensor& t, int line,
                        const std::string& u, const std::string& v) {
  std::string out;
  const auto m = static_cast<size_t>(line);
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = 0; j < 4; ++j) {
      const double c = t[m][i][j];
      if (c == 0.0) continue;
      if (!out.empty()) out += ' ';
      out += term_text(c, i, j, u, v);
    }
  }
  return out.empty() ? "0" : out;
}

TableComparison compare(const PrintedTable& table, Rng& rng, int samples) {
  if (table.candidates.empty()) {
    throw InvalidArgument("table '" + table.name + "' has no candidates");
  }
  const CoefficientTensor printed = parse_table(table.lines);
  TableComparison c;
  c.table = table.name;
  std::vector<CoefficientTensor> generated;
  for (const auto& cand : table.candidates) {
    generated.push_back(probe(cand.form));
    CandidateScore s;
    s.name = cand.name;
    s.mismatched_terms = mismatches(printed, generated.back());
    c.scores.push_back(s);
  }
  for (int k = 0; k < samples; ++k) {
    Components u{};
    Components v{};
    for (size_t i = 0; i < 4; ++i) {
      u[i] = rng.normal();
      v[i] = rng.normal();
    }
    const Components p = evaluate(printed, u, v);
    for (size_t n = 0; n < table.candidates.size(); ++n) {
      const Components g = table.candidates[n].form(u, v);
      for (size_t m = 0; m < 4; ++m) {
        c.scores[n].sample_discrepancy =
            std::max(c.scores[n].sample_discrepancy, std::fabs(p[m] - g[m]));
      }
    }
  }
  size_t best = 0;
  for (size_t n = 1; n < c.scores.size(); ++n) {
    if (c.scores[n].mismatched_terms < c.scores[best].mismatched_terms) best = n;
  }
  c.best = c.scores[best].name;
  c.primary_mismatches = c.scores.front().mismatched_terms;
  const CoefficientTensor& g = generated[best];
  for (int m = 0; m < 4; ++m) {
    LineDiff d;
    d.line = m;
    const auto mm = static_cast<size_t>(m);
    for (size_t i = 0; i < 4; ++i) {
      for (size_t j = 0; j < 4; ++j) {
        const double a = printed[mm][i][j];
        const double b = g[mm][i][j];
        if (std::fabs(a - b) < 1e-12) continue;
        if (a != 0.0) {
          d.printed_only.push_back(
              term_text(a, i, j, table.u_symbol, table.v_symbol));
        }
        if (b != 0.0) {
          d.generated_only.push_back(
              term_text(b, i, j, table.u_symbol, table.v_symbol));
        }
      }
    }
    if (d.printed_only.empty() && d.generated_only.empty()) continue;
    d.printed = render_line(printed, m, table.u_symbol, table.v_symbol);
    d.generated = render_line(g, m, table.u_symbol, table.v_symbol);
    c.diffs.push_back(std::move(d));
  }
  return c;
}

namespace {

Quaternion q_of(const Components& c) { return {c[0], c[1], c[2], c[3]}; }

// sum_i c_i b_i for a frame b.
Quaternion in_frame(const Components& c, const std::array<Quaternion, 4>& b) {
  Quaternion q;
  for (size_t i = 0; i < 4; ++i) q += c[i] * b[i];
  return q;
}

Components psi_out(const Quaternion& q) {
  return psi_coords(q, StructuralSet::cimmino()).c;
}

Components std_out(const Quaternion& q) { return q.coords(); }

std::array<Quaternion, 4> psi_frame() {
  return StructuralSet::cimmino().elements();
}

std::array<Quaternion, 4> std_frame() {
  return StructuralSet::standard().elements();
}

// (1, -e1, -e2, -e3): the coefficients of the hatted differentials in
// the boundary form for the default frame, -sgn(psi) (-1)^k psi_k.
std::array<Quaternion, 4> hat_frame() {
  const auto& psi = StructuralSet::cimmino();
  std::array<Quaternion, 4> s;
  for (int k = 0; k < 4; ++k) {
    s[static_cast<size_t>(k)] =
        (-psi.sign() * (k % 2 == 0 ? 1.0 : -1.0)) * psi[k];
  }
  return s;
}

// Derivative along psi_k (u) applied to f with standard components v.
Candidate operator_lhs(const std::string& name,
                       std::array<Quaternion, 4> frame, bool psi_output) {
  return {name, [frame, psi_output](const Components& u, const Components& v) {
            const Quaternion f = q_of(v);
            Quaternion out;
            for (size_t k = 0; k < 4; ++k) out += u[k] * (frame[k] * f);
            return psi_output ? psi_out(out) : std_out(out);
          }};
}

// Perturbation term: q with psi-coordinates u times f, moved to the right
// hand side with the given sign.
Candidate perturbation_rhs(const std::string& name, double sign,
                           std::array<Quaternion, 4> frame, bool psi_output) {
  return {name, [sign, frame, psi_output](const Components& u,
                                          const Components& v) {
            const Quaternion out = sign * (in_frame(u, frame) * q_of(v));
            return psi_output ? psi_out(out) : std_out(out);
          }};
}

// Left factor with standard components u, right factor v expanded in `b`.
Candidate product(const std::string& name, std::array<Quaternion, 4> a,
                  std::array<Quaternion, 4> b, bool psi_output) {
  return {name, [a, b, psi_output](const Components& u, const Components& v) {
            const Quaternion out = in_frame(u, a) * in_frame(v, b);
            return psi_output ? psi_out(out) : std_out(out);
          }};
}

}  // namespace

std::vector<PrintedTable> printed_tables() {
  const auto psi = psi_frame();
  const auto e = std_frame();
  const auto hat = hat_frame();
  std::vector<PrintedTable> t;

  t.push_back({"cimmino-system-lhs", "d", "f",
               {"+u0v0 +u2v2 -u1v1 -u3v3", "+u1v0 +u0v1 -u3v2 +u2v3",
                "+u2v0 +u1v3 -u3v1 -u0v2", "+u3v0 +u2v1 +u1v2 +u0v3"},
               {operator_lhs("psi-frame derivatives, psi-coordinates", psi, true),
                operator_lhs("psi-frame derivatives, standard components", psi,
                             false),
                operator_lhs("standard derivatives, standard components", e,
                             false)}});

  const std::array<std::string, 4> rhs = {
      "+u0v0 +u2v2 -u1v1 -u3v3", "+u1v0 +u0v1 -u3v2 +u2v3",
      "+u2v0 +u1v3 -u3v1 -u0v3", "+u3v0 +u2v1 +u1v2 +u0v3"};
  auto rhs_candidates = [&] {
    return std::vector<Candidate>{
        perturbation_rhs("-q f (kernel of D + q), psi-coordinates", -1.0, psi,
                         true),
        perturbation_rhs("+q f (kernel of D - q), psi-coordinates", 1.0, psi,
                         true),
        perturbation_rhs("+q f, standard components", 1.0, e, false)};
  };
  t.push_back({"cimmino-system-rhs", "q", "f", rhs, rhs_candidates()});
  auto delta_rhs = rhs;
  delta_rhs[2] = "+u2v0 +u1v3 -u3v1 -u0v2";
  t.push_back({"variable-perturbation-rhs", "delta", "f", delta_rhs,
               rhs_candidates()});

  t.push_back({"cauchy-theorem-components", "dx", "f",
               {"+u0v0 +u1v1 +u2v2 +u3v3", "-u1v0 +u0v1 +u3v2 -u2v3",
                "-u2v0 +u1v3 +u3v1 +u0v2", "-u3v0 +u2v1 -u1v2 +u0v3"},
               {product("boundary form times f, standard components", hat, e,
                        false),
                product("boundary form times f, psi-coordinates", hat, e, true),
                product("f times boundary form, standard components", e, hat,
                        false)}});
  // The last candidate above multiplies in the other order only through the
  // roles of u and v; keep the primary as the implemented order.

  t.push_back({"kernel-surface-products", "K", "dy",
               {"+u0v0 +u1v1 +u2v2 +u3v3", "-u0v1 +u1v0 -u2v3 +u3v2",
                "-u0v2 +u1v3 +u2v0 -u3v1", "-u0v3 -u1v2 +u2v1 +u3v0"},
               {product("K times boundary form, standard components", e, hat,
                        false),
                product("K times boundary form, psi-coordinates", e, hat, true)}});

  const std::array<std::string, 4> left_product = {
      "+u0v0 -u1v1 -u2v2 -u3v3", "+u0v1 +u1v0 +u2v3 -u3v2",
      "+u0v2 -u1v3 +u2v0 -u3v1", "+u0v3 +u1v2 -u2v1 +u3v0"};
  auto product_candidates = [&] {
    return std::vector<Candidate>{
        product("left product, standard components", e, e, false),
        product("left product, psi-coordinates", e, e, true)};
  };
  t.push_back({"cauchy-formula-components", "Ks", "f", left_product,
               product_candidates()});

  const std::array<std::string, 4> coefficient_product = {
      "+u0v0 -u1v1 -u2v2 -u3v3", "+u1v0 +u0v1 -u3v2 +u2v3",
      "+u2v0 -u1v3 +u3v1 +u0v2", "+u3v0 -u2v1 +u1v2 +u0v3"};
  t.push_back({"pullback-components", "A", "f", coefficient_product,
               product_candidates()});
  t.push_back({"conformal-isometry-components", "C", "f", coefficient_product,
               product_candidates()});

  auto conj_frame = [](std::array<Quaternion, 4> b) {
    for (auto& x : b) x = conj(x);
    return b;
  };
  t.push_back({"cb-form", "f", "g",
               {"+u0v0 +u1v1 +u2v2 +u3v3", "+u0v1 -u1v0 +u2v3 -u3v2",
                "+u0v2 +u3v1 -u1v3 -u2v0", "+u0v3 -u1v2 +u2v1 -u3v0"},
               {product("conj(f) g, psi-coordinates", conj_frame(e), e, true),
                product("conj(f) g, standard components", conj_frame(e), e,
                        false),
                {"g conj(f), psi-coordinates",
                 [](const Components& u, const Components& v) {
                   return psi_out(q_of(v) * conj(q_of(u)));
                 }},
                {"g conj(f), standard components",
                 [](const Components& u, const Components& v) {
                   return std_out(q_of(v) * conj(q_of(u)));
                 }}}});

  t.push_back({"reproducing-formula", "B", "f",
               {"+u0v0 -u1v1 -u2v2 -u3v3", "+u0v1 +u1v0 +u2v3 -u3v2",
                "+u0v2 -u1v3 +u2v0 +u3v1", "+u0v3 +u1v2 -u2v1 +u3v0"},
               product_candidates()});
  return t;
}

nlohmann::json to_json(const TableComparison& c) {
  nlohmann::json scores = nlohmann::json::array();
  for (const auto& s : c.scores) {
    scores.push_back({{"candidate", s.name},
                      {"mismatched_terms", s.mismatched_terms},
                      {"sample_discrepancy", s.sample_discrepancy}});
  }
  nlohmann::json diffs = nlohmann::json::array();
  for (const auto& d : c.diffs) {
    diffs.push_back({{"line", d.line},
                     {"printed", d.printed},
                     {"generated", d.generated},
                     {"printed_only", d.printed_only},
                     {"generated_only", d.generated_only}});
  }
  return {{"table", c.table},
          {"best_candidate", c.best},
          {"primary_mismatches", c.primary_mismatches},
          {"candidates", scores},
          {"differences", diffs}};
}

Report errata_check(std::uint64_t seed, int samples) {
  Report rep("errata", 0.0);
  rep.params = {{"seed", seed}, {"samples", samples}};
  Rng rng(seed);
  const auto tables = printed_tables();
  nlohmann::json summary = nlohmann::json::array();
  size_t compared = 0;
  for (const auto& table : tables) {
    const TableComparison c = compare(table, rng, samples);
    ++compared;
    summary.push_back(to_json(c));
    if (c.best != c.scores.front().name) {
      rep.errata.push_back({{"table", c.table},
                            {"kind", "convention"},
                            {"implemented", c.scores.front().name},
                            {"implemented_mismatches", c.primary_mismatches},
                            {"printed_closest_to", c.best}});
    }
    for (const auto& d : c.diffs) {
      rep.errata.push_back({{"table", c.table},
                            {"kind", "term"},
                            {"line", d.line},
                            {"convention", c.best},
                            {"printed", d.printed},
                            {"generated", d.generated},
                            {"printed_only", d.printed_only},
                            {"generated_only", d.generated_only}});
    }
  }
  rep.diagnostics["tables"] = summary;
  rep.add("tables_not_compared",
          static_cast<double>(tables.size() - compared), 0.0);
  return rep.finalize();
}

}  // namespace hyperholo
