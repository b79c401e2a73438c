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
#include <span>
#include <vector>

#include "json.hpp"

#include "hyperholo/fields.hpp"
#include "hyperholo/geometry.hpp"
#include "hyperholo/moebius.hpp"
#include "hyperholo/report.hpp"

namespace hyperholo {

enum class WeightKind { unweighted, lambda_q, gamma, rho };

const char* to_string(WeightKind k);

/// A weighted L2 structure on a domain, realized on fixed quadrature nodes.
/// `weights` already include the weight function.
class InnerProductSpec {
 public:
  /// Default quadrature for inner products (smooth integrands).
  static Resolution default_resolution() { return {12, 12, 24, 12, 8}; }

  static InnerProductSpec unweighted(const Domain4& domain,
                                     const Resolution& res = default_resolution());
  /// e^{2<q, x>_psi}.
  static InnerProductSpec lambda(const Domain4& domain, const Quaternion& q,
                                 const StructuralSet& psi,
                                 const Resolution& res = default_resolution());
  /// e^{2<r - q, T^{-1}(y)>_psi} on the image domain.
  static InnerProductSpec gamma(const Domain4& domain, const MoebiusMap& t,
                                const Quaternion& r, const Quaternion& q,
                                const StructuralSet& psi,
                                const Resolution& res = default_resolution());
  /// rho_T(x).
  static InnerProductSpec rho(const Domain4& domain, const MoebiusMap& t,
                              const Resolution& res = default_resolution());

  /// Same weight function on caller-supplied nodes and base weights.
  InnerProductSpec with_quadrature(const VolumeQuadrature& quad) const;

  /// The weight function itself.
  double weight(const Quaternion& x) const;

  WeightKind kind() const { return kind_; }
  const Domain4& domain() const { return domain_; }
  const std::vector<Quaternion>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  const StructuralSet& psi() const { return psi_; }
  nlohmann::json to_json() const;

 private:
  InnerProductSpec(WeightKind kind, const Domain4& domain,
                   const StructuralSet& psi);
  void assign(const VolumeQuadrature& quad);

  WeightKind kind_;
  Domain4 domain_;
  StructuralSet psi_;
  Quaternion q_, r_;
  std::optional<MoebiusMap> map_;
  std::vector<Quaternion> nodes_;
  std::vector<double> weights_;
};

/// int conj(f) g w dmu.
Quaternion inner_product(const QuaternionField& f, const QuaternionField& g,
                         const InnerProductSpec& spec);
double norm_squared(const QuaternionField& f, const InnerProductSpec& spec);

/// psi-coordinates of inner_product(f, g); entry 0 is the real part.
std::array<double, 4> cb_form(const QuaternionField& f, const QuaternionField& g,
                              const InnerProductSpec& spec);

/// Kernel of the span of a dictionary in a weighted space:
/// B(x, xi) = sum_jk phi_j(x) H_jk conj(phi_k(xi)), H the pseudo-inverse of
/// the quaternionic Gram matrix G_jk = <phi_j, phi_k>.
class SubspaceKernel {
 public:
  /// Relative eigenvalue cutoff of the pseudo-inverse.
  static constexpr double kCutoff = 1e-10;

  SubspaceKernel(std::vector<QuaternionField> entries, InnerProductSpec spec);

  size_t size() const { return entries_.size(); }
  size_t rank() const { return rank_; }
  const std::vector<QuaternionField>& entries() const { return entries_; }
  const InnerProductSpec& spec() const { return spec_; }
  /// Row-major n x n.
  const std::vector<Quaternion>& gram() const { return gram_; }
  const std::vector<Quaternion>& gram_inverse() const { return inverse_; }
  /// Eigenvalues of the real 4n x 4n representation (each 4-fold).
  const std::vector<double>& spectrum() const { return spectrum_; }

  Quaternion operator()(const Quaternion& x, const Quaternion& xi) const;

  /// Right coefficients c = H <phi, g> of the projection of g.
  std::vector<Quaternion> coefficients(const QuaternionField& g) const;
  /// sum_j phi_j(x) c_j with c = coefficients(g).
  Quaternion project(const QuaternionField& g, const Quaternion& x) const;
  /// The projection of g as a field (with partials when all entries have them).
  QuaternionField projection(const QuaternionField& g) const;
  /// int B(x, zeta) g(zeta) w dmu summed directly over the nodes.
  Quaternion reproduce(const QuaternionField& g, const Quaternion& x) const;

  nlohmann::json to_json() const;

 private:
  std::vector<QuaternionField> entries_;
  InnerProductSpec spec_;
  std::vector<std::vector<Quaternion>> values_;  // values_[j][node]
  std::vector<Quaternion> gram_;
  std::vector<Quaternion> inverse_;
  std::vector<double> spectrum_;
  size_t rank_ = 0;
};

/// x -> e^{<q - r, x>_psi} f(x).
QuaternionField s_isometry(const QuaternionField& f, const Quaternion& q,
                           const Quaternion& r, const StructuralSet& psi);

/// x -> e^{<r - q, x>_psi} C_T(x) f(T(x)).
QuaternionField j_isometry(const MoebiusMap& t, const Quaternion& r,
                           const Quaternion& q, const QuaternionField& f,
                           const StructuralSet& psi);

/// Quadrature for T(domain) obtained by pushing the nodes of `quad` through
/// T with weights scaled by |T'|^4.
VolumeQuadrature pushforward_quadrature(const VolumeQuadrature& quad,
                                        const MoebiusMap& t);

/// Reproduction on the entries, Hermitian symmetry, Gram spectrum.
Report kernel_check(const SubspaceKernel& k, std::span<const Quaternion> points,
                    double tolerance = 1e-6);

/// Idempotence and span invariance of the projection of g, plus the image
/// of a component orthogonal to the span.
Report projection_check(const SubspaceKernel& k, const QuaternionField& g,
                        std::span<const Quaternion> points,
                        double tolerance = 1e-8);

/// max over (x, xi) of |B_r(x, xi) - e^{<q - r, x + xi>} B_q(x, xi)| relative
/// to the larger side. `shifted` must be built on the S-images of `base`.
double weight_shift_residual(const SubspaceKernel& base,
                             const SubspaceKernel& shifted,
                             const Quaternion& q, const Quaternion& r,
                             std::span<const std::pair<Quaternion, Quaternion>> pairs);

/// max over (x, xi) in the source domain of
/// |B_rho(x, xi) - e^{<r-q, x+xi>} C_T(x) B_gamma(Tx, T xi) conj(C_T(xi))|.
/// `image` lives on the target domain (weight gamma), `source` on the
/// preimage (weight rho) and holds the J-images of image's entries.
double conformal_residual(const SubspaceKernel& image,
                          const SubspaceKernel& source, const MoebiusMap& t,
                          const Quaternion& r, const Quaternion& q,
                          std::span<const std::pair<Quaternion, Quaternion>> pairs);

/// int_{unit ball} e^{2<q,x>} dmu = pi^2 I_2(2|q|) / |q|^2 (pi^2/2 at 0).
double lambda_ball_mass(const Quaternion& q);

struct RelationsOptions {
  Quaternion q;
  Quaternion r;
  MoebiusMap map = MoebiusMap::translation({0.3, -0.2, 0.1, 0.25});
  int pairs = 20;
  std::uint64_t seed = 7;
  double closed_form_tolerance = 1e-8;
  double tolerance = 1e-6;
  double isometry_tolerance = 1e-12;
};

/// Weight-shift relation on {1} (against the closed form) and on the given
/// dictionary, S-isometry norm preservation, and the conformal relation.
Report relations_check(const Dictionary& dictionary, const Domain4& domain,
                       const RelationsOptions& options,
                       const Resolution& res = InnerProductSpec::default_resolution());

/// Both norms finite for every entry; on a domain inside <q, x> < 0 the
/// weighted norm never exceeds the unweighted one; equality at q = 0.
Report inclusion_check(const Dictionary& dictionary, const Quaternion& q,
                       const Domain4& domain,
                       const Resolution& res = InnerProductSpec::default_resolution());

}  // namespace hyperholo
