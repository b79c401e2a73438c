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

#include "hyperholo/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "hyperholo/error.hpp"
#include "hyperholo/numerics.hpp"

namespace hyperholo {

const char* to_string(WeightKind k) {
  switch (k) {
    case WeightKind::unweighted: return "unweighted";
    case WeightKind::lambda_q: return "lambda_q";
    case WeightKind::gamma: return "gamma";
    case WeightKind::rho: return "rho";
  }
  return "unweighted";
}

InnerProductSpec::InnerProductSpec(WeightKind kind, const Domain4& domain,
                                   const StructuralSet& psi)
    : kind_(kind), domain_(domain), psi_(psi) {}

void InnerProductSpec::assign(const VolumeQuadrature& quad) {
  nodes_ = quad.nodes;
  weights_.resize(quad.size());
  for (size_t i = 0; i < quad.size(); ++i) {
    weights_[i] = quad.weights[i] * weight(quad.nodes[i]);
  }
}

InnerProductSpec InnerProductSpec::unweighted(const Domain4& domain,
                                              const Resolution& res) {
  InnerProductSpec s(WeightKind::unweighted, domain, StructuralSet::cimmino());
  s.assign(volume_quadrature(domain, res));
  return s;
}

InnerProductSpec InnerProductSpec::lambda(const Domain4& domain,
                                          const Quaternion& q,
                                          const StructuralSet& psi,
                                          const Resolution& res) {
  InnerProductSpec s(WeightKind::lambda_q, domain, psi);
  s.q_ = q;
  s.assign(volume_quadrature(domain, res));
  return s;
}

InnerProductSpec InnerProductSpec::gamma(const Domain4& domain,
                                         const MoebiusMap& t,
                                         const Quaternion& r,
                                         const Quaternion& q,
                                         const StructuralSet& psi,
                                         const Resolution& res) {
  InnerProductSpec s(WeightKind::gamma, domain, psi);
  s.q_ = q;
  s.r_ = r;
  s.map_ = t;
  s.assign(volume_quadrature(domain, res));
  return s;
}

InnerProductSpec InnerProductSpec::rho(const Domain4& domain,
                                       const MoebiusMap& t,
                                       const Resolution& res) {
  InnerProductSpec s(WeightKind::rho, domain, StructuralSet::cimmino());
  s.map_ = t;
  s.assign(volume_quadrature(domain, res));
  return s;
}

InnerProductSpec InnerProductSpec::with_quadrature(
    const VolumeQuadrature& quad) const {
  InnerProductSpec s = *this;
  s.assign(quad);
  return s;
}

double InnerProductSpec::weight(const Quaternion& x) const {
  switch (kind_) {
    case WeightKind::unweighted: return 1.0;
    case WeightKind::lambda_q: return std::exp(2.0 * pairing(q_, x, psi_));
    case WeightKind::gamma:
      return std::exp(2.0 * pairing(r_ - q_, map_->inverse(x), psi_));
    case WeightKind::rho:
      return rho_coefficient(*map_, x);
  }
  return 1.0;
}

nlohmann::json InnerProductSpec::to_json() const {
  nlohmann::json j = {{"weight", to_string(kind_)},
                      {"domain", domain_.to_json()},
                      {"nodes", nodes_.size()}};
  if (kind_ == WeightKind::lambda_q || kind_ == WeightKind::gamma) {
    j["q"] = hyperholo::to_json(q_);
  }
  if (kind_ == WeightKind::gamma) j["r"] = hyperholo::to_json(r_);
  if (map_) j["map"] = map_->to_json();
  return j;
}

Quaternion inner_product(const QuaternionField& f, const QuaternionField& g,
                         const InnerProductSpec& spec) {
  const auto& nodes = spec.nodes();
  const auto& w = spec.weights();
  std::vector<Quaternion> terms(nodes.size());
  parallel_for(terms.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) {
      terms[i] = w[i] * (conj(f(nodes[i])) * g(nodes[i]));
    }
  });
  return pairwise_sum(terms);
}

double norm_squared(const QuaternionField& f, const InnerProductSpec& spec) {
  const auto& nodes = spec.nodes();
  const auto& w = spec.weights();
  std::vector<double> terms(nodes.size());
  parallel_for(terms.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) terms[i] = w[i] * norm2(f(nodes[i]));
  });
  return pairwise_sum(terms);
}

std::array<double, 4> cb_form(const QuaternionField& f, const QuaternionField& g,
                              const InnerProductSpec& spec) {
  return psi_coords(inner_product(f, g, spec), spec.psi()).c;
}

namespace {

// Matrix of y -> q y in the standard basis.
Eigen::Matrix4d left_matrix(const Quaternion& q) {
  Eigen::Matrix4d m;
  for (int k = 0; k < 4; ++k) {
    const Quaternion col = q * Quaternion::unit(k);
    for (int j = 0; j < 4; ++j) m(j, k) = col[j];
  }
  return m;
}

}  // namespace

SubspaceKernel::SubspaceKernel(std::vector<QuaternionField> entries,
                               InnerProductSpec spec)
    : entries_(std::move(entries)), spec_(std::move(spec)) {
  const size_t n = entries_.size();
  if (n == 0) throw InvalidArgument("subspace kernel needs a dictionary entry");
  const auto& nodes = spec_.nodes();
  const auto& w = spec_.weights();
  values_.assign(n, std::vector<Quaternion>(nodes.size()));
  for (size_t j = 0; j < n; ++j) {
    auto& vj = values_[j];
    const QuaternionField& f = entries_[j];
    parallel_for(nodes.size(), [&](size_t b, size_t e) {
      for (size_t i = b; i < e; ++i) vj[i] = f(nodes[i]);
    });
  }

  gram_.assign(n * n, Quaternion{});
  std::vector<Quaternion> terms(nodes.size());
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = j; k < n; ++k) {
      for (size_t i = 0; i < nodes.size(); ++i) {
        terms[i] = w[i] * (conj(values_[j][i]) * values_[k][i]);
      }
      gram_[j * n + k] = pairwise_sum(terms);
      gram_[k * n + j] = conj(gram_[j * n + k]);
    }
    // The diagonal is real up to rounding.
    gram_[j * n + j] = Quaternion(gram_[j * n + j].q0);
  }

  const auto m = static_cast<Eigen::Index>(4 * n);
  Eigen::MatrixXd real(m, m);
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < n; ++k) {
      real.block<4, 4>(static_cast<Eigen::Index>(4 * j),
                       static_cast<Eigen::Index>(4 * k)) =
          left_matrix(gram_[j * n + k]);
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(real);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::internal, "Gram eigen-decomposition failed");
  }
  const Eigen::VectorXd lambda = eig.eigenvalues();
  const double lmax = lambda.maxCoeff();
  Eigen::MatrixXd pinv = Eigen::MatrixXd::Zero(m, m);
  size_t kept = 0;
  spectrum_.clear();
  for (Eigen::Index i = 0; i < m; ++i) {
    spectrum_.push_back(lambda(i));
    if (lmax > 0.0 && lambda(i) > kCutoff * lmax) {
      const Eigen::VectorXd v = eig.eigenvectors().col(i);
      pinv += (v * v.transpose()) / lambda(i);
      ++kept;
    }
  }
  rank_ = (kept + 2) / 4;
  inverse_.assign(n * n, Quaternion{});
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < n; ++k) {
      // L(h) e_0 = h: the first column of each block is the entry.
      Quaternion h;
      for (int c = 0; c < 4; ++c) {
        h[c] = pinv(static_cast<Eigen::Index>(4 * j) + c,
                    static_cast<Eigen::Index>(4 * k));
      }
      inverse_[j * n + k] = h;
    }
  }
  // Exact pseudo-inverses of Hermitian matrices are Hermitian; remove the
  // rounding asymmetry so that B(x, xi) = conj(B(xi, x)) holds to rounding.
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = j; k < n; ++k) {
      const Quaternion h =
          0.5 * (inverse_[j * n + k] + conj(inverse_[k * n + j]));
      inverse_[j * n + k] = h;
      inverse_[k * n + j] = conj(h);
    }
  }
}

Quaternion SubspaceKernel::operator()(const Quaternion& x,
                                      const Quaternion& xi) const {
  const size_t n = size();
  std::vector<Quaternion> fx(n);
  std::vector<Quaternion> fxi(n);
  for (size_t j = 0; j < n; ++j) {
    fx[j] = entries_[j](x);
    fxi[j] = conj(entries_[j](xi));
  }
  Quaternion b;
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < n; ++k) b += fx[j] * inverse_[j * n + k] * fxi[k];
  }
  return b;
}

std::vector<Quaternion> SubspaceKernel::coefficients(
    const QuaternionField& g) const {
  const size_t n = size();
  const auto& nodes = spec_.nodes();
  const auto& w = spec_.weights();
  std::vector<Quaternion> gv(nodes.size());
  parallel_for(nodes.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) gv[i] = g(nodes[i]);
  });
  std::vector<Quaternion> rhs(n);
  std::vector<Quaternion> terms(nodes.size());
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < nodes.size(); ++i) {
      terms[i] = w[i] * (conj(values_[k][i]) * gv[i]);
    }
    rhs[k] = pairwise_sum(terms);
  }
  std::vector<Quaternion> c(n);
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < n; ++k) c[j] += inverse_[j * n + k] * rhs[k];
  }
  if (rank_ == n) {
    // One step of iterative refinement against G c = rhs.
    std::vector<Quaternion> res(rhs);
    for (size_t j = 0; j < n; ++j) {
      for (size_t k = 0; k < n; ++k) res[j] -= gram_[j * n + k] * c[k];
    }
    for (size_t j = 0; j < n; ++j) {
      for (size_t k = 0; k < n; ++k) c[j] += inverse_[j * n + k] * res[k];
    }
  }
  return c;
}

Quaternion SubspaceKernel::project(const QuaternionField& g,
                                   const Quaternion& x) const {
  const auto c = coefficients(g);
  Quaternion v;
  for (size_t j = 0; j < size(); ++j) v += entries_[j](x) * c[j];
  return v;
}

QuaternionField SubspaceKernel::projection(const QuaternionField& g) const {
  const auto c = coefficients(g);
  return right_combination(entries_, c, "P[" + g.label() + "]");
}

Quaternion SubspaceKernel::reproduce(const QuaternionField& g,
                                     const Quaternion& x) const {
  const size_t n = size();
  const auto& nodes = spec_.nodes();
  const auto& w = spec_.weights();
  // a_k = sum_j phi_j(x) H_jk, then B(x, zeta) = sum_k a_k conj(phi_k(zeta)).
  std::vector<Quaternion> a(n);
  for (size_t j = 0; j < n; ++j) {
    const Quaternion fj = entries_[j](x);
    for (size_t k = 0; k < n; ++k) a[k] += fj * inverse_[j * n + k];
  }
  std::vector<Quaternion> terms(nodes.size());
  parallel_for(nodes.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) {
      Quaternion kern;
      for (size_t k = 0; k < n; ++k) kern += a[k] * conj(values_[k][i]);
      terms[i] = w[i] * (kern * g(nodes[i]));
    }
  });
  return pairwise_sum(terms);
}

nlohmann::json SubspaceKernel::to_json() const {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& e : entries_) labels.push_back(e.label());
  nlohmann::json gram = nlohmann::json::array();
  for (const auto& g : gram_) gram.push_back(hyperholo::to_json(g));
  return {{"spec", spec_.to_json()},
          {"entries", labels},
          {"rank", rank_},
          {"spectrum", spectrum_},
          {"gram", gram}};
}

QuaternionField s_isometry(const QuaternionField& f, const Quaternion& q,
                           const Quaternion& r, const StructuralSet& psi) {
  return exp_weighted(f, q - r, psi);
}

QuaternionField j_isometry(const MoebiusMap& t, const Quaternion& r,
                           const Quaternion& q, const QuaternionField& f,
                           const StructuralSet& psi) {
  return pullback(t, r, q, f, PullbackKind::c, psi);
}

VolumeQuadrature pushforward_quadrature(const VolumeQuadrature& quad,
                                        const MoebiusMap& t) {
  VolumeQuadrature out;
  out.nodes.reserve(quad.size());
  out.weights.reserve(quad.size());
  for (size_t i = 0; i < quad.size(); ++i) {
    const double s = t.scale(quad.nodes[i]);
    out.nodes.push_back(t(quad.nodes[i]));
    out.weights.push_back(quad.weights[i] * s * s * s * s);
  }
  return out;
}

Report kernel_check(const SubspaceKernel& k, std::span<const Quaternion> points,
                    double tolerance) {
  Report rep("bergman-kernel", tolerance);
  rep.params = {{"spec", k.spec().to_json()},
                {"entries", k.size()},
                {"points", points.size()}};
  double reproduction = 0.0;
  for (const auto& phi : k.entries()) {
    for (const auto& x : points) {
      const Quaternion fx = phi(x);
      reproduction = std::max(
          reproduction, norm(k.reproduce(phi, x) - fx) / (1.0 + norm(fx)));
    }
  }
  double hermitian = 0.0;
  for (size_t i = 0; i + 1 < points.size(); i += 2) {
    const Quaternion b1 = k(points[i], points[i + 1]);
    const Quaternion b2 = k(points[i + 1], points[i]);
    hermitian = std::max(hermitian, norm(b1 - conj(b2)) /
                                        std::max(norm(b1), 1e-300));
  }
  rep.add("reproduction", reproduction);
  rep.add("hermitian_symmetry", hermitian, 1e-12);
  rep.add("rank_deficit", static_cast<double>(k.size() - k.rank()), 0.0);
  const auto& s = k.spectrum();
  rep.diagnostics["rank"] = k.rank();
  rep.diagnostics["spectrum_min"] = *std::min_element(s.begin(), s.end());
  rep.diagnostics["spectrum_max"] = *std::max_element(s.begin(), s.end());
  rep.diagnostics["kernel"] = k.to_json();
  return rep.finalize();
}

Report projection_check(const SubspaceKernel& k, const QuaternionField& g,
                        std::span<const Quaternion> points, double tolerance) {
  Report rep("bergman-project", tolerance);
  rep.params = {{"spec", k.spec().to_json()},
                {"g", g.label()},
                {"points", points.size()}};
  const QuaternionField pg = k.projection(g);
  const QuaternionField ppg = k.projection(pg);
  double idem = 0.0;
  for (const auto& x : points) {
    const Quaternion v = pg(x);
    idem = std::max(idem, norm(ppg(x) - v) / (1.0 + norm(v)));
  }
  double span = 0.0;
  for (const auto& phi : k.entries()) {
    const QuaternionField pphi = k.projection(phi);
    for (const auto& x : points) {
      const Quaternion v = phi(x);
      span = std::max(span, norm(pphi(x) - v) / (1.0 + norm(v)));
    }
  }
  // g - Pg is orthogonal to the span; its projection must vanish.
  const QuaternionField residual = difference(g, pg);
  const QuaternionField pres = k.projection(residual);
  double orth = 0.0;
  for (const auto& x : points) {
    orth = std::max(orth, norm(pres(x)) / (1.0 + norm(g(x))));
  }
  rep.add("idempotence", idem);
  rep.add("span_invariance", span, 1e-6);
  rep.add("orthogonal_component", orth);
  return rep.finalize();
}

namespace {

double relative_gap(const Quaternion& a, const Quaternion& b) {
  return norm(a - b) / std::max({norm(a), norm(b), 1e-300});
}

void require_same_rank(const SubspaceKernel& a, const SubspaceKernel& b) {
  if (a.rank() != b.rank() || a.size() != b.size()) {
    std::ostringstream msg;
    msg << "kernels have ranks " << a.rank() << " and " << b.rank();
    throw RankMismatchError(msg.str());
  }
}

}  // namespace

double weight_shift_residual(
    const SubspaceKernel& base, const SubspaceKernel& shifted,
    const Quaternion& q, const Quaternion& r,
    std::span<const std::pair<Quaternion, Quaternion>> pairs) {
  require_same_rank(base, shifted);
  const StructuralSet& psi = base.spec().psi();
  double worst = 0.0;
  for (const auto& [x, xi] : pairs) {
    const Quaternion expected =
        std::exp(pairing(q - r, x + xi, psi)) * base(x, xi);
    worst = std::max(worst, relative_gap(shifted(x, xi), expected));
  }
  return worst;
}

double conformal_residual(
    const SubspaceKernel& image, const SubspaceKernel& source,
    const MoebiusMap& t, const Quaternion& r, const Quaternion& q,
    std::span<const std::pair<Quaternion, Quaternion>> pairs) {
  require_same_rank(image, source);
  const StructuralSet& psi = image.spec().psi();
  double worst = 0.0;
  for (const auto& [x, xi] : pairs) {
    const Quaternion expected = std::exp(pairing(r - q, x + xi, psi)) *
                                c_coefficient(t, x) * image(t(x), t(xi)) *
                                conj(c_coefficient(t, xi));
    worst = std::max(worst, relative_gap(source(x, xi), expected));
  }
  return worst;
}

double lambda_ball_mass(const Quaternion& q) {
  const double s = norm(q);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  if (s < 1e-4) {
    // Series of I_2(2s)/s^2 = 1/2 + s^2/6 + s^4/48 + ...
    const double s2 = s * s;
    return pi2 * (0.5 + s2 / 6.0 + s2 * s2 / 48.0);
  }
  return pi2 * std::cyl_bessel_i(2.0, 2.0 * s) / (s * s);
}

namespace {

std::vector<std::pair<Quaternion, Quaternion>> sample_pairs(
    const Domain4& domain, Rng& rng, int count) {
  std::vector<std::pair<Quaternion, Quaternion>> pairs;
  for (int i = 0; i < count; ++i) {
    const Quaternion x = sample_point(domain, rng, 0.9);
    const Quaternion xi = sample_point(domain, rng, 0.9);
    pairs.emplace_back(x, xi);
  }
  return pairs;
}

// Closed form of int_{ball} e^{2<q,x>} dmu.
double lambda_mass(const Domain4& domain, const Quaternion& q) {
  const Ball& b = domain.as_ball();
  const double r4 = std::pow(b.radius, 4);
  return std::exp(2.0 * dot(q, b.center)) * r4 * lambda_ball_mass(b.radius * q);
}

}  // namespace

Report relations_check(const Dictionary& dictionary, const Domain4& domain,
                       const RelationsOptions& o, const Resolution& res) {
  const StructuralSet& psi = dictionary.psi;
  Report rep("bergman-relations", o.tolerance);
  rep.params = {{"q", to_json(o.q)},
                {"r", to_json(o.r)},
                {"map", o.map.to_json()},
                {"domain", domain.to_json()},
                {"dictionary", to_json(dictionary)},
                {"pairs", o.pairs},
                {"seed", o.seed}};
  Rng rng(o.seed);
  const auto pairs = sample_pairs(domain, rng, o.pairs);

  const InnerProductSpec spec_q = InnerProductSpec::lambda(domain, o.q, psi, res);
  const InnerProductSpec spec_r = InnerProductSpec::lambda(domain, o.r, psi, res);

  // {1} in the lambda_q space and its S-image in the lambda_r space.
  {
    const QuaternionField one = constant_field(1.0);
    const SubspaceKernel base({one}, spec_q);
    const SubspaceKernel shifted({s_isometry(one, o.q, o.r, psi)}, spec_r);
    rep.add("weight_shift_constant",
            weight_shift_residual(base, shifted, o.q, o.r, pairs),
            o.closed_form_tolerance);
    if (domain.is_ball()) {
      const double mass = lambda_mass(domain, o.q);
      double worst = 0.0;
      for (const auto& [x, xi] : pairs) {
        worst = std::max(worst, relative_gap(base(x, xi), 1.0 / mass));
        const double shift = std::exp(pairing(o.q - o.r, x + xi, psi));
        worst = std::max(worst, relative_gap(shifted(x, xi), shift / mass));
      }
      rep.add("weight_shift_closed_form", worst, o.closed_form_tolerance);
      rep.diagnostics["closed_form_gram"] = mass;
      rep.diagnostics["quadrature_gram"] = base.gram().front().q0;
    }
  }

  // Dictionary entries and their S-images.
  {
    std::vector<QuaternionField> images;
    for (const auto& e : dictionary.entries) {
      images.push_back(s_isometry(e, o.q, o.r, psi));
    }
    const SubspaceKernel base(dictionary.entries, spec_q);
    const SubspaceKernel shifted(images, spec_r);
    rep.add("weight_shift_dictionary",
            weight_shift_residual(base, shifted, o.q, o.r, pairs));
    double iso = 0.0;
    for (size_t j = 0; j < images.size(); ++j) {
      const double a = norm_squared(dictionary.entries[j], spec_q);
      const double b = norm_squared(images[j], spec_r);
      iso = std::max(iso, std::fabs(a - b) / a);
    }
    rep.add("s_isometry_norm", iso, o.isometry_tolerance);
  }

  // Conformal relation: entries on T(domain) with weight gamma, their
  // J-images on the domain with weight rho, on matched quadratures.
  {
    const MoebiusMap& t = o.map;
    std::vector<QuaternionField> image_entries;
    if (t.affine()) {
      const Quaternion delta = delta_coefficient(t, o.r, 0.0);
      std::vector<Quaternion> poles;
      for (const auto& p : dictionary.poles) poles.push_back(t(p));
      CertificationOptions cert;
      cert.center = t(domain.centroid());
      cert.radius = domain.length_scale();
      image_entries = build_dictionary(psi, delta, poles,
                                       dictionary.degree_one, cert)
                          .entries;
    } else {
      for (const auto& e : dictionary.entries) {
        image_entries.push_back(pushforward(t, o.r, o.q, e, psi));
      }
    }
    std::vector<QuaternionField> source_entries;
    for (const auto& e : image_entries) {
      source_entries.push_back(j_isometry(t, o.r, o.q, e, psi));
    }
    const VolumeQuadrature source_quad = volume_quadrature(domain, res);
    const InnerProductSpec source_spec =
        InnerProductSpec::rho(domain, t, res);
    const bool is_translation = t.affine() && t.a() == Quaternion(1.0) &&
                                t.d() == Quaternion(1.0);
    const Domain4 image_domain =
        is_translation ? translated(domain, t.b()) : domain;
    const InnerProductSpec image_spec =
        InnerProductSpec::gamma(image_domain, t, o.r, o.q, psi, res)
            .with_quadrature(pushforward_quadrature(source_quad, t));
    const SubspaceKernel image(image_entries, image_spec);
    const SubspaceKernel source(source_entries, source_spec);
    rep.add("conformal", conformal_residual(image, source, t, o.r, o.q, pairs));
    rep.diagnostics["conformal_rank"] = source.rank();
  }
  return rep.finalize();
}

Report inclusion_check(const Dictionary& dictionary, const Quaternion& q,
                       const Domain4& domain, const Resolution& res) {
  const StructuralSet& psi = dictionary.psi;
  Report rep("inclusion", 1e-12);
  const auto [lo, hi] = domain.linear_range(q);
  const bool half_space = hi < 0.0;
  const bool zero_q = q == Quaternion{};
  rep.params = {{"q", to_json(q)},
                {"domain", domain.to_json()},
                {"dictionary", to_json(dictionary)},
                {"inside_negative_half_space", half_space}};
  const InnerProductSpec plain = InnerProductSpec::unweighted(domain, res);
  const InnerProductSpec weighted = InnerProductSpec::lambda(domain, q, psi, res);
  double nonfinite = 0.0;
  double excess = 0.0;
  double equality = 0.0;
  nlohmann::json norms = nlohmann::json::array();
  for (const auto& e : dictionary.entries) {
    const double a = std::sqrt(norm_squared(e, plain));
    const double b = std::sqrt(norm_squared(e, weighted));
    if (!std::isfinite(a) || !std::isfinite(b)) nonfinite += 1.0;
    excess = std::max(excess, (b - a) / a);
    equality = std::max(equality, std::fabs(b - a) / a);
    norms.push_back({{"entry", e.label()}, {"unweighted", a}, {"weighted", b}});
  }
  rep.add("nonfinite_norms", nonfinite, 0.0);
  if (half_space) rep.add("weighted_excess", std::max(excess, 0.0), 0.0);
  if (zero_q) rep.add("zero_q_equality", equality);
  rep.diagnostics["norms"] = norms;
  rep.diagnostics["linear_range"] = {lo, hi};
  return rep.finalize();
}

}  // namespace hyperholo
