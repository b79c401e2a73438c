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

#include "hyperholo/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "hyperholo/bergman.hpp"
#include "hyperholo/cauchy.hpp"
#include "hyperholo/component_forms.hpp"
#include "hyperholo/error.hpp"
#include "hyperholo/operators.hpp"

namespace hyperholo {

std::vector<Quaternion> CheckSettings::effective_poles() const {
  if (poles) return *poles;
  const Quaternion c = domain.centroid();
  const double s = 2.5 * domain.length_scale();
  return {c + Quaternion(s), c - s * kE2};
}

double CheckSettings::tolerance_for(const std::string& check,
                                    double fallback) const {
  const auto it = tolerances.find(check);
  return it == tolerances.end() ? fallback : it->second;
}

nlohmann::json CheckSettings::to_json() const {
  nlohmann::json poles_json = nlohmann::json::array();
  for (const auto& p : effective_poles()) poles_json.push_back(hyperholo::to_json(p));
  return {{"seed", seed},
          {"psi", hyperholo::to_json(psi)},
          {"domain", domain.to_json()},
          {"q", hyperholo::to_json(q)},
          {"r", hyperholo::to_json(r)},
          {"map", map.to_json()},
          {"resolutions",
           {{"surface", surface.to_json()},
            {"volume", volume.to_json()},
            {"study", study.to_json()}}},
          {"dictionary", {{"poles", poles_json}, {"degree_one", degree_one}}},
          {"points", {{"interior", interior_points}, {"exterior", exterior_points}}},
          {"samples", samples}};
}

// -- config ------------------------------------------------------------------

namespace {

void require_keys(const nlohmann::json& j, const std::string& where,
                  std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError("expected an object", where);
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
          return key == a;
        }) == allowed.end()) {
      throw ConfigError("unknown key", where.empty() ? key : where + "." + key);
    }
  }
}

template <typename F>
auto field(const std::string& name, F&& read) -> decltype(read()) {
  try {
    return read();
  } catch (const ConfigError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(e.what(), name);
  } catch (const Error& e) {
    throw ConfigError(e.what(), name);
  }
}

int positive_int(const nlohmann::json& j, const std::string& name) {
  return field(name, [&] {
    const int v = j.get<int>();
    if (v <= 0) throw ConfigError("must be positive", name);
    return v;
  });
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j) {
  require_keys(j, "",
               {"seed", "psi", "domain", "q", "r", "map", "resolutions",
                "points", "samples", "dictionary", "checks", "tolerances"});
  ExperimentConfig cfg;
  CheckSettings& s = cfg.settings;
  if (j.contains("seed")) {
    s.seed = field("seed", [&] { return j["seed"].get<std::uint64_t>(); });
  }
  if (j.contains("psi")) {
    s.psi = field("psi", [&] { return structural_set_from_json(j["psi"]); });
  }
  if (j.contains("domain")) {
    s.domain = field("domain", [&] { return Domain4::from_json(j["domain"]); });
  }
  if (j.contains("q")) s.q = field("q", [&] { return quaternion_from_json(j["q"]); });
  if (j.contains("r")) s.r = field("r", [&] { return quaternion_from_json(j["r"]); });
  if (j.contains("map")) {
    s.map = field("map", [&] { return MoebiusMap::from_json(j["map"]); });
  }
  if (j.contains("resolutions")) {
    const auto& res = j["resolutions"];
    require_keys(res, "resolutions", {"surface", "volume", "study"});
    if (res.contains("surface"))
      s.surface = field("resolutions.surface",
                        [&] { return Resolution::from_json(res["surface"]); });
    if (res.contains("volume"))
      s.volume = field("resolutions.volume",
                       [&] { return Resolution::from_json(res["volume"]); });
    if (res.contains("study"))
      s.study = field("resolutions.study",
                      [&] { return Resolution::from_json(res["study"]); });
  }
  if (j.contains("points")) {
    const auto& p = j["points"];
    require_keys(p, "points", {"interior", "exterior"});
    if (p.contains("interior"))
      s.interior_points = positive_int(p["interior"], "points.interior");
    if (p.contains("exterior"))
      s.exterior_points = positive_int(p["exterior"], "points.exterior");
  }
  if (j.contains("samples")) s.samples = positive_int(j["samples"], "samples");
  if (j.contains("dictionary")) {
    const auto& d = j["dictionary"];
    require_keys(d, "dictionary", {"poles", "degree_one"});
    if (d.contains("poles")) {
      s.poles.emplace();
      field("dictionary.poles", [&] {
        if (!d["poles"].is_array()) throw ConfigError("expected an array", "dictionary.poles");
        for (const auto& p : d["poles"]) s.poles->push_back(quaternion_from_json(p));
        return 0;
      });
      for (const auto& p : *s.poles) {
        if (s.domain.signed_distance(p) > -1e-9) {
          throw ConfigError("pole must lie outside the domain",
                            "dictionary.poles");
        }
      }
    }
    if (d.contains("degree_one")) {
      s.degree_one =
          field("dictionary.degree_one", [&] { return d["degree_one"].get<bool>(); });
    }
  }
  if (!j.contains("checks")) throw ConfigError("missing", "checks");
  field("checks", [&] {
    if (!j["checks"].is_array()) throw ConfigError("expected an array", "checks");
    for (const auto& c : j["checks"]) {
      const auto name = c.get<std::string>();
      if (!is_check(name)) throw ConfigError("unknown check '" + name + "'", "checks");
      cfg.checks.push_back(name);
    }
    return 0;
  });
  if (cfg.checks.empty()) throw ConfigError("no checks listed", "checks");
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    if (!t.is_object()) throw ConfigError("expected an object", "tolerances");
    for (const auto& [key, value] : t.items()) {
      const std::string name = "tolerances." + key;
      if (!is_check(key)) throw ConfigError("unknown check", name);
      const double v = field(name, [&] { return value.get<double>(); });
      if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("must be > 0", name);
      s.tolerances[key] = v;
    }
  }
  return cfg;
}

ExperimentConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    size_t line = 1;
    size_t column = 1;
    const size_t end = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
    for (size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << "parse error at line " << line << ", column " << column;
    throw ConfigError(msg.str());
  }
  return config_from_json(j);
}

// -- suites ------------------------------------------------------------------

void merge_into(Report& into, const Report& from, const std::string& prefix) {
  for (const auto& r : from.residuals) {
    Residual copy = r;
    copy.label = prefix + "/" + r.label;
    if (!copy.tolerance) copy.tolerance = from.tolerance;
    into.residuals.push_back(std::move(copy));
  }
  for (const auto& e : from.errata) into.errata.push_back(e);
  if (!from.diagnostics.empty()) into.diagnostics[prefix] = from.diagnostics;
}

namespace {

double det4(const std::array<Quaternion, 4>& cols) {
  double m[4][4];
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) m[r][c] = cols[static_cast<size_t>(c)][r];
  double det = 1.0;
  for (int k = 0; k < 4; ++k) {
    int p = k;
    for (int i = k + 1; i < 4; ++i)
      if (std::fabs(m[i][k]) > std::fabs(m[p][k])) p = i;
    if (m[p][k] == 0.0) return 0.0;
    if (p != k) {
      for (int c = 0; c < 4; ++c) std::swap(m[p][c], m[k][c]);
      det = -det;
    }
    det *= m[k][k];
    for (int i = k + 1; i < 4; ++i) {
      const double f = m[i][k] / m[k][k];
      for (int c = k; c < 4; ++c) m[i][c] -= f * m[k][c];
    }
  }
  return det;
}

}  // namespace

Report algebra_check(std::uint64_t seed, int samples, double tolerance) {
  Report rep("algebra", tolerance);
  rep.params = {{"seed", seed}, {"samples", samples}};
  Rng rng(seed);
  double assoc = 0, distrib = 0, normmul = 0, conjanti = 0, selfconj = 0,
         inv = 0, ortho = 0, sign = 0, pairing_dev = 0;
  for (int s = 0; s < samples; ++s) {
    const Quaternion a = rng.normal_quaternion();
    const Quaternion b = rng.normal_quaternion();
    const Quaternion c = rng.normal_quaternion();
    const double na = norm(a), nb = norm(b), nc = norm(c);
    assoc = std::max(assoc, norm((a * b) * c - a * (b * c)) / (na * nb * nc));
    distrib = std::max(distrib, norm(a * (b + c) - (a * b + a * c)) / (na * (nb + nc)));
    normmul = std::max(normmul, std::fabs(norm(a * b) - na * nb) / (na * nb));
    conjanti = std::max(conjanti, norm(conj(a * b) - conj(b) * conj(a)) / (na * nb));
    selfconj = std::max(selfconj, norm(a * conj(a) - Quaternion(norm2(a))) / norm2(a));
    inv = std::max(inv, norm(a * inverse(a) - Quaternion(1.0)));

    // Random frame u e_k v (and its reflection) is orthonormal.
    const Quaternion u = rng.unit_quaternion();
    const Quaternion v = rng.unit_quaternion();
    std::array<Quaternion, 4> frame;
    for (int k = 0; k < 4; ++k) frame[static_cast<size_t>(k)] = u * Quaternion::unit(k) * v;
    if (s % 2 == 1) frame[2] = -frame[2];
    const StructuralSet psi(frame);
    for (int k = 0; k < 4; ++k)
      for (int m = 0; m < 4; ++m)
        ortho = std::max(ortho, std::fabs(dot(psi[k], psi[m]) - (k == m ? 1.0 : 0.0)));
    sign = std::max(sign, std::fabs(det4(psi.elements()) - psi.sign()));
    pairing_dev = std::max(pairing_dev,
                           std::fabs(pairing(b, c, psi) - dot(b, c)) / (nb * nc));
  }
  const Quaternion e1 = kE1, e2 = kE2, e3 = kE3;
  const double units = std::max(
      {norm(e1 * e2 - e3), norm(e2 * e3 - e1), norm(e3 * e1 - e2),
       norm(e1 * e1 + 1.0), norm(e2 * e2 + 1.0), norm(e3 * e3 + 1.0)});
  const auto& cim = StructuralSet::cimmino();
  rep.add("associativity", assoc);
  rep.add("distributivity", distrib);
  rep.add("norm_multiplicativity", normmul);
  rep.add("conjugate_antihomomorphism", conjanti);
  rep.add("q_conj_q_real", selfconj);
  rep.add("inverse", inv);
  rep.add("unit_relations", units);
  rep.add("frame_orthonormality", ortho);
  rep.add("frame_sign_determinant", sign);
  rep.add("pairing_frame_independence", pairing_dev);
  rep.add("default_frame_sign", std::fabs(cim.sign() + 1.0));
  return rep.finalize();
}

Report operator_check(const Dictionary& dictionary, const Domain4& domain,
                      std::uint64_t seed, const OperatorSuiteOptions& o) {
  Report rep("operators", o.tolerance);
  rep.params = {{"seed", seed},
                {"points", o.points},
                {"h", o.h},
                {"study_h", o.study_h},
                {"dictionary", to_json(dictionary)},
                {"domain", domain.to_json()}};
  Rng rng(seed);
  std::vector<Quaternion> points;
  while (static_cast<int>(points.size()) < o.points) {
    const Quaternion x = sample_point(domain, rng, 0.95);
    bool clear = true;
    for (const auto& p : dictionary.poles) clear = clear && norm(x - p) > 0.25;
    if (clear) points.push_back(x);
  }
  double worst = 0.0;
  double ratio_excess = 0.0;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& entry : dictionary.entries) {
    const OperatorKind kind = entry.annihilator() == Annihilator::q_psi_fueter_right ||
                                      entry.annihilator() == Annihilator::psi_fueter_right
                                  ? OperatorKind::right(entry.perturbation())
                                  : OperatorKind::left(entry.perturbation());
    auto residual_sum = [&](double h, double* max_out) {
      const DiffOptions diff{h, DerivativeMode::finite_difference, false};
      std::vector<double> vals(points.size());
      for (size_t i = 0; i < points.size(); ++i) {
        const Quaternion x = points[i];
        vals[i] = norm(apply(kind, entry, x, dictionary.psi, diff)) /
                  (1.0 + norm(entry(x)));
      }
      if (max_out) *max_out = *std::max_element(vals.begin(), vals.end());
      return pairwise_sum(vals);
    };
    double max_res = 0.0;
    residual_sum(o.h, &max_res);
    worst = std::max(worst, max_res);
    const double coarse = residual_sum(o.study_h, nullptr);
    const double fine = residual_sum(0.5 * o.study_h, nullptr);
    nlohmann::json e = {{"label", entry.label()}, {"max_residual", max_res}};
    if (coarse / static_cast<double>(points.size()) > o.truncation_floor) {
      const double ratio = coarse / fine;
      e["halving_ratio"] = ratio;
      ratio_excess = std::max(
          ratio_excess, std::max(o.ratio_lo - ratio, ratio - o.ratio_hi));
    } else {
      e["halving_ratio"] = nullptr;
    }
    entries.push_back(e);
  }
  rep.add("max_fd_residual", worst);
  rep.add("halving_ratio_outside_band", std::max(0.0, ratio_excess), 0.0);
  rep.diagnostics["entries"] = entries;
  return rep.finalize();
}

// -- registry ----------------------------------------------------------------

namespace {

CertificationOptions certification_for(const CheckSettings& s) {
  CertificationOptions c;
  c.center = s.domain.centroid();
  c.radius = s.domain.length_scale();
  c.seed = check_seed(s.seed, "certification");
  return c;
}

Dictionary dictionary_for(const CheckSettings& s) {
  const auto poles = s.effective_poles();
  return build_dictionary(s.psi, s.q, poles, s.degree_one, certification_for(s));
}

// Radius of a ball around the centroid that contains the domain.
double outer_radius(const Domain4& d) {
  if (d.is_ball()) return d.as_ball().radius;
  const Box& b = d.as_box();
  double s = 0.0;
  for (size_t k = 0; k < 4; ++k) s += 0.25 * (b.hi[k] - b.lo[k]) * (b.hi[k] - b.lo[k]);
  return std::sqrt(s);
}

std::vector<Quaternion> interior_points(const CheckSettings& s, Rng& rng,
                                        int count, double shrink) {
  std::vector<Quaternion> pts;
  for (int i = 0; i < count; ++i) pts.push_back(sample_point(s.domain, rng, shrink));
  return pts;
}

Report check_operators(const CheckSettings& s, std::uint64_t seed) {
  OperatorSuiteOptions o;
  o.tolerance = s.tolerance_for("operators", o.tolerance);
  o.points = std::max(o.points, s.interior_points);
  return operator_check(dictionary_for(s), s.domain, seed, o);
}

Report check_stokes(const CheckSettings& s, std::uint64_t seed) {
  const double tol = s.tolerance_for("stokes", 1e-6);
  Report rep("stokes", tol);
  rep.params = s.to_json();
  Rng rng(seed);
  const int pairs = 3;
  for (int i = 0; i < pairs; ++i) {
    const QuaternionField f = random_polynomial(rng);
    const QuaternionField g = random_polynomial(rng);
    merge_into(rep, stokes_check(f, g, s.q, s.psi, s.domain, s.surface, tol),
               "pair" + std::to_string(i));
  }
  // f = 1, g a certified left solution: both sides reduce to q int g.
  const Dictionary dict = dictionary_for(s);
  merge_into(rep,
             stokes_check(constant_field(1.0), dict[0], s.q, s.psi, s.domain,
                          s.surface, tol),
             "one_and_solution");
  return rep.finalize();
}

Report check_cauchy_theorem(const CheckSettings& s, std::uint64_t) {
  const double tol = s.tolerance_for("cauchy-theorem", 1e-8);
  Report rep("cauchy-theorem", tol);
  rep.params = s.to_json();
  const Dictionary dict = dictionary_for(s);
  for (size_t i = 0; i < dict.size(); ++i) {
    merge_into(rep, cauchy_theorem_check(dict[i], s.q, s.psi, s.domain, s.surface, tol),
               "entry" + std::to_string(i));
    rep.diagnostics["entry" + std::to_string(i)]["label"] = dict[i].label();
  }
  const Report control = cauchy_theorem_check(constant_field(kE1), Quaternion(1.0),
                                              s.psi, s.domain, s.surface, tol);
  rep.add_lower_bound("negative_control", control.residuals.front().value, 1e-3);
  rep.diagnostics["negative_control"] = {{"f", "e1"}, {"q", 1.0}};
  return rep.finalize();
}

Report check_cauchy_formula(const CheckSettings& s, std::uint64_t seed) {
  FormulaCheckOptions o;
  o.tolerance = s.tolerance_for("cauchy-formula", o.tolerance);
  o.study = s.study;
  Report rep("cauchy-formula", o.tolerance);
  rep.params = s.to_json();
  Rng rng(seed);
  const auto interior = interior_points(s, rng, s.interior_points, 0.5);
  const Quaternion c = s.domain.centroid();
  const double rad = outer_radius(s.domain);
  std::vector<Quaternion> exterior;
  for (int i = 0; i < s.exterior_points; ++i)
    exterior.push_back(rng.in_shell(c, 1.5 * rad, 2.0 * rad));
  const Dictionary dict = build_dictionary(s.psi, s.q, {}, s.degree_one,
                                           certification_for(s));
  for (size_t i = 0; i < dict.size(); ++i) {
    merge_into(rep,
               cauchy_formula_check(dict[i], s.q, s.psi, s.domain, interior,
                                    exterior, s.surface, o),
               "entry" + std::to_string(i));
    rep.diagnostics["entry" + std::to_string(i)]["label"] = dict[i].label();
  }
  return rep.finalize();
}

Report check_covariance(const CheckSettings& s, std::uint64_t seed) {
  const double tol = s.tolerance_for("covariance", 1e-5);
  Report rep("covariance", tol);
  rep.params = s.to_json();
  Rng rng(seed);
  const auto affine = covariance_samples(rng, s.samples, true);
  double worst = 0.0;
  for (const auto& a : affine) {
    const Report r = covariance_check(a.map, a.r, a.q, a.f, a.x, s.psi, 1e-4,
                                      BExponent::plus_four, tol);
    worst = std::max(worst, r.residuals.front().value);
  }
  rep.add("affine_max_relative", worst);
  const auto general = covariance_samples(rng, s.samples, false);
  merge_into(rep, exponent_study(general, s.psi, 1e-4, tol), "exponent");

  // The configured map, r and q on random polynomials at domain points.
  double configured = 0.0;
  int used = 0;
  for (int i = 0; i < s.samples; ++i) {
    const QuaternionField f = random_polynomial(rng);
    const Quaternion x = sample_point(s.domain, rng, 0.9);
    try {
      const Report r = covariance_check(s.map, s.r, s.q, f, x, s.psi, 1e-4,
                                        BExponent::plus_four, tol);
      configured = std::max(configured, r.residuals.front().value);
      ++used;
    } catch (const PoleOfMapError&) {
    } catch (const SingularityError&) {
    }
  }
  rep.add("configured_map_max_relative", configured);
  rep.diagnostics["configured_map_points"] = used;
  return rep.finalize();
}

SubspaceKernel kernel_for(const CheckSettings& s) {
  return SubspaceKernel(dictionary_for(s).entries,
                        InnerProductSpec::lambda(s.domain, s.q, s.psi, s.volume));
}

Report check_bergman_kernel(const CheckSettings& s, std::uint64_t seed) {
  Rng rng(seed);
  const auto pts = interior_points(s, rng, s.interior_points, 0.8);
  Report rep = kernel_check(kernel_for(s), pts, s.tolerance_for("bergman-kernel", 1e-6));
  rep.params["settings"] = s.to_json();
  return rep;
}

Report check_bergman_project(const CheckSettings& s, std::uint64_t seed) {
  Rng rng(seed);
  const auto pts = interior_points(s, rng, s.interior_points, 0.8);
  const QuaternionField g = random_polynomial(rng);
  Report rep = projection_check(kernel_for(s), g, pts,
                                s.tolerance_for("bergman-project", 1e-8));
  rep.params["settings"] = s.to_json();
  return rep;
}

Report check_bergman_relations(const CheckSettings& s, std::uint64_t seed) {
  RelationsOptions o;
  o.q = s.q;
  o.r = s.r;
  o.map = s.map;
  o.seed = seed;
  o.tolerance = s.tolerance_for("bergman-relations", o.tolerance);
  Report rep = relations_check(dictionary_for(s), s.domain, o, s.volume);
  rep.params["settings"] = s.to_json();
  return rep;
}

Report check_inclusion(const CheckSettings& s, std::uint64_t) {
  Report rep = inclusion_check(dictionary_for(s), s.q, s.domain, s.volume);
  if (auto it = s.tolerances.find("inclusion"); it != s.tolerances.end()) {
    rep.tolerance = it->second;
    rep.finalize();
  }
  rep.params["settings"] = s.to_json();
  return rep;
}

using CheckFn = std::function<Report(const CheckSettings&, std::uint64_t)>;

struct Entry {
  CheckInfo info;
  CheckFn run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {{"algebra", "quaternion axioms, frames, pairing"},
       [](const CheckSettings& s, std::uint64_t seed) {
         return algebra_check(seed, std::max(10000, s.samples),
                              s.tolerance_for("algebra", 1e-12));
       }},
      {{"operators", "finite-difference residuals of dictionary entries"},
       check_operators},
      {{"stokes", "boundary vs volume integral for field pairs"}, check_stokes},
      {{"cauchy-theorem", "weighted boundary integral of solutions"},
       check_cauchy_theorem},
      {{"cauchy-formula", "boundary reconstruction inside and outside"},
       check_cauchy_formula},
      {{"covariance", "Moebius covariance of the perturbed operator"},
       check_covariance},
      {{"bergman-kernel", "subspace kernel reproduction and symmetry"},
       check_bergman_kernel},
      {{"bergman-project", "projection idempotence and span invariance"},
       check_bergman_project},
      {{"bergman-relations", "weight-shift and conformal kernel relations"},
       check_bergman_relations},
      {{"inclusion", "weighted vs unweighted norms on bounded domains"},
       check_inclusion},
      {{"errata", "generated vs printed component formulas"},
       [](const CheckSettings& s, std::uint64_t seed) {
         (void)s;
         return errata_check(seed);
       }},
  };
  return e;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

bool is_check(const std::string& name) {
  const auto& r = check_registry();
  return std::any_of(r.begin(), r.end(),
                     [&](const CheckInfo& c) { return c.name == name; });
}

std::uint64_t check_seed(std::uint64_t seed, const std::string& name) {
  return seed + stable_hash(name);
}

Report run_check(const std::string& name, const CheckSettings& settings) {
  const auto& all = entries();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const Entry& e) { return e.info.name == name; });
  if (it == all.end()) throw InvalidArgument("unknown check '" + name + "'");
  const std::uint64_t seed = check_seed(settings.seed, name);
  try {
    Report rep = it->run(settings, seed);
    rep.name = name;
    rep.params["check_seed"] = seed;
    return rep;
  } catch (const Error& e) {
    Report rep(name, settings.tolerance_for(name, 0.0));
    rep.params = settings.to_json();
    rep.params["check_seed"] = seed;
    rep.diagnostics["error"] = e.what();
    rep.diagnostics["error_code"] = static_cast<int>(e.code());
    return rep.finalize();
  }
}

std::vector<Report> run_experiment(const ExperimentConfig& config,
                                   const RunOptions& options) {
  const size_t n = config.checks.size();
  std::vector<Report> out(n);
  auto run_one = [&](size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    out[i] = run_check(config.checks[i], config.settings);
    if (options.timings) {
      out[i].runtime_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
    }
  };
  const size_t jobs = std::min(n, static_cast<size_t>(std::max(1, options.jobs)));
  if (jobs <= 1) {
    for (size_t i = 0; i < n; ++i) run_one(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  for (size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) run_one(i);
    });
  }
  for (auto& t : workers) t.join();
  return out;
}

namespace {

// Residual closest to (or furthest past) its bound.
const Residual* worst_residual(const Report& r) {
  const Residual* worst = nullptr;
  double worst_score = -1.0;
  for (const auto& res : r.residuals) {
    const double bound = res.tolerance.value_or(r.tolerance);
    double score;
    if (!std::isfinite(res.value)) {
      score = INFINITY;
    } else if (res.at_least) {
      score = res.value > 0 ? bound / res.value : INFINITY;
    } else {
      score = bound > 0 ? res.value / bound : (res.value > 0 ? INFINITY : 0.0);
    }
    if (!res.ok(r.tolerance)) score = INFINITY;
    if (!worst || score > worst_score) {
      worst = &res;
      worst_score = score;
    }
    if (score == INFINITY) break;
  }
  return worst;
}

std::string format_value(double v) {
  std::ostringstream s;
  s << std::setprecision(3) << std::scientific << v;
  return s.str();
}

}  // namespace

std::string csv_summary(const std::vector<Report>& reports) {
  std::ostringstream s;
  s << "name,pass,worst_residual,value,bound\n";
  for (const auto& r : reports) {
    const Residual* w = worst_residual(r);
    s << r.name << ',' << (r.pass ? "true" : "false") << ',';
    if (w) {
      s << w->label << ',' << format_value(w->value) << ','
        << format_value(w->tolerance.value_or(r.tolerance));
    } else {
      s << ",,";
    }
    s << '\n';
  }
  return s.str();
}

std::string text_summary(const std::vector<Report>& reports) {
  std::ostringstream s;
  s << std::left << std::setw(20) << "check" << std::setw(6) << "pass"
    << std::setw(44) << "worst residual" << std::setw(12) << "value"
    << "bound\n";
  for (const auto& r : reports) {
    const Residual* w = worst_residual(r);
    s << std::left << std::setw(20) << r.name << std::setw(6)
      << (r.pass ? "ok" : "FAIL");
    if (w) {
      s << std::setw(44) << w->label << std::setw(12) << format_value(w->value)
        << (w->at_least ? ">= " : "<= ")
        << format_value(w->tolerance.value_or(r.tolerance));
    } else if (r.diagnostics.contains("error")) {
      s << r.diagnostics["error"].get<std::string>();
    }
    s << '\n';
  }
  return s.str();
}

}  // namespace hyperholo
