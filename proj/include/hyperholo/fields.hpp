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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperholo/numerics.hpp"
#include "hyperholo/quaternion.hpp"
#include "hyperholo/structural_set.hpp"

namespace hyperholo {

/// Which operator a field is known to be annihilated by.
enum class Annihilator {
  none,
  psi_fueter_left,
  q_psi_fueter_left,
  psi_fueter_right,
  q_psi_fueter_right,
};

const char* to_string(Annihilator a);

/// Partial derivatives d f / d x_j in standard coordinates, j = 0..3.
using Jacobian = std::array<Quaternion, 4>;

/// Quaternion-valued map on R^4 with optional closed-form first partials.
/// Evaluators must be re-entrant; fields are immutable values.
class QuaternionField {
 public:
  using Evaluator = std::function<Quaternion(const Quaternion&)>;
  using Partials = std::function<Jacobian(const Quaternion&)>;

  QuaternionField(std::string label, Evaluator evaluator,
                  Partials partials = {},
                  Annihilator annihilator = Annihilator::none,
                  Quaternion perturbation = {});

  Quaternion operator()(const Quaternion& x) const { return eval_(x); }
  Quaternion eval(const Quaternion& x) const { return eval_(x); }

  bool has_partials() const { return static_cast<bool>(partials_); }
  /// Throws InvalidArgument when the field carries no partials.
  Jacobian partials(const Quaternion& x) const;

  const std::string& label() const { return label_; }
  Annihilator annihilator() const { return annihilator_; }
  /// Perturbation the annihilator tag refers to (0 for unperturbed tags).
  const Quaternion& perturbation() const { return perturbation_; }

  QuaternionField relabeled(std::string label) const;
  QuaternionField retagged(Annihilator a, const Quaternion& perturbation) const;
  /// Same values, partials dropped (forces finite differences downstream).
  QuaternionField without_partials() const;

 private:
  std::string label_;
  Evaluator eval_;
  Partials partials_;
  Annihilator annihilator_;
  Quaternion perturbation_;
};

// -- elementary fields ------------------------------------------------------

QuaternionField constant_field(const Quaternion& value);

/// x -> x. Not hyperholomorphic; used as an operator test input.
QuaternionField identity_field();

/// x -> |x|^2 (real-valued).
QuaternionField squared_norm_field();

/// z_k(x) = c_k(x) - conj(psi_0) psi_k c_0(x) with c the psi-coordinates of
/// x; for psi_0 = 1 this is x_k - psi_k x_0. Annihilated by the left
/// psi-Fueter operator. Throws InvalidArgument unless k is 1, 2 or 3.
QuaternionField fueter_variable(int k, const StructuralSet& psi);

/// Quadratic quaternionic polynomial a + sum_j b_j x_j + sum_{j<=k} c_jk x_j x_k
/// with coefficients drawn from `rng`; general (non-solution) test input.
QuaternionField random_polynomial(Rng& rng, double scale = 1.0);

/// x -> e^{<p, x>_psi} g(x). Partials follow the product rule.
QuaternionField exp_weighted(const QuaternionField& g, const Quaternion& p,
                             const StructuralSet& psi);

/// f(x) = e^{-<q, x>_psi} g(x). A g annihilated by the left operator with
/// perturbation p yields f annihilated with perturbation p + q.
QuaternionField exp_modulate(const QuaternionField& g, const Quaternion& q,
                             const StructuralSet& psi);

/// x -> K^psi_q(pole - x); evaluation at the pole throws SingularityError.
QuaternionField kernel_field(const Quaternion& pole, const Quaternion& q,
                             const StructuralSet& psi);

/// x -> sum_j f_j(x) c_j (quaternion coefficients on the right).
QuaternionField right_combination(std::span<const QuaternionField> fields,
                                  std::span<const Quaternion> coeffs,
                                  std::string label = "combination");

/// x -> f(x) - g(x).
QuaternionField difference(const QuaternionField& f, const QuaternionField& g);

// -- dictionaries -----------------------------------------------------------

struct CertificationOptions {
  int samples = 100;
  double h = 1e-4;
  double tolerance = 1e-6;  // residual <= tolerance * (1 + |f|)
  Quaternion center{};
  double radius = 1.0;
  /// Sample points closer than this to a pole are redrawn.
  double pole_clearance = 0.25;
  std::uint64_t seed = 20260101;
};

struct CertificationResult {
  double max_residual = 0.0;  // max of |D f| / (1 + |f|)
  Quaternion worst_point;
  bool pass = true;
};

/// Runs the tagged annihilator with central differences at random points.
/// Fields tagged `none` trivially pass with residual 0.
CertificationResult certify(const QuaternionField& f, const StructuralSet& psi,
                            const CertificationOptions& options,
                            std::span<const Quaternion> poles = {});

struct Dictionary {
  std::vector<QuaternionField> entries;
  StructuralSet psi = StructuralSet::cimmino();
  Quaternion q;
  std::vector<Quaternion> poles;
  bool degree_one = true;

  size_t size() const { return entries.size(); }
  const QuaternionField& operator[](size_t i) const { return entries[i]; }
};

/// {e^{-<q,x>}, e^{-<q,x>} z_1..z_3 (if degree_one), K^psi_q(pole - x)...},
/// certified on construction. Throws CertificationError naming the worst
/// entry when a residual exceeds the tolerance.
Dictionary build_dictionary(const StructuralSet& psi, const Quaternion& q,
                            std::span<const Quaternion> poles, bool degree_one,
                            const CertificationOptions& options = {});

nlohmann::json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j);
nlohmann::json to_json(const StructuralSet& psi);
StructuralSet structural_set_from_json(const nlohmann::json& j);

/// {psi, q, poles, degree_one, labels}.
nlohmann::json to_json(const Dictionary& d);
/// Rebuilds (and re-certifies) a dictionary from its description.
Dictionary dictionary_from_json(const nlohmann::json& j,
                                const CertificationOptions& options = {});

}  // namespace hyperholo
