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

#include "hyperholo/fields.hpp"

#include <cmath>
#include <sstream>

#include "hyperholo/error.hpp"
#include "hyperholo/kernels.hpp"
#include "hyperholo/operators.hpp"

namespace hyperholo {

const char* to_string(Annihilator a) {
  switch (a) {
    case Annihilator::none: return "none";
    case Annihilator::psi_fueter_left: return "psi_fueter_left";
    case Annihilator::q_psi_fueter_left: return "q_psi_fueter_left";
    case Annihilator::psi_fueter_right: return "psi_fueter_right";
    case Annihilator::q_psi_fueter_right: return "q_psi_fueter_right";
  }
  return "none";
}

QuaternionField::QuaternionField(std::string label, Evaluator evaluator,
                                 Partials partials, Annihilator annihilator,
                                 Quaternion perturbation)
    : label_(std::move(label)),
      eval_(std::move(evaluator)),
      partials_(std::move(partials)),
      annihilator_(annihilator),
      perturbation_(perturbation) {
  if (!eval_) throw InvalidArgument("field '" + label_ + "' has no evaluator");
}

Jacobian QuaternionField::partials(const Quaternion& x) const {
  if (!partials_) {
    throw InvalidArgument("field '" + label_ + "' carries no partials");
  }
  return partials_(x);
}

QuaternionField QuaternionField::relabeled(std::string label) const {
  QuaternionField f = *this;
  f.label_ = std::move(label);
  return f;
}

QuaternionField QuaternionField::retagged(Annihilator a,
                                          const Quaternion& perturbation) const {
  QuaternionField f = *this;
  f.annihilator_ = a;
  f.perturbation_ = perturbation;
  return f;
}

QuaternionField QuaternionField::without_partials() const {
  QuaternionField f = *this;
  f.partials_ = {};
  return f;
}

QuaternionField constant_field(const Quaternion& value) {
  std::ostringstream label;
  if (value.vector_part() == Quaternion{}) {
    label << value.q0;
  } else {
    label << value;
  }
  // Constants are annihilated by both unperturbed operators.
  return QuaternionField(
      label.str(), [value](const Quaternion&) { return value; },
      [](const Quaternion&) { return Jacobian{}; },
      Annihilator::psi_fueter_left);
}

QuaternionField identity_field() {
  return QuaternionField(
      "x", [](const Quaternion& x) { return x; },
      [](const Quaternion&) {
        return Jacobian{Quaternion(1.0), kE1, kE2, kE3};
      });
}

QuaternionField squared_norm_field() {
  return QuaternionField(
      "|x|^2", [](const Quaternion& x) { return Quaternion(norm2(x)); },
      [](const Quaternion& x) {
        Jacobian j;
        for (int k = 0; k < 4; ++k) j[static_cast<size_t>(k)] = 2.0 * x[k];
        return j;
      });
}

QuaternionField fueter_variable(int k, const StructuralSet& psi) {
  if (k < 1 || k > 3) {
    throw InvalidArgument("Fueter variable index must be 1, 2 or 3");
  }
  const Quaternion factor = conj(psi[0]) * psi[k];
  Jacobian jac;
  for (int j = 0; j < 4; ++j) {
    jac[static_cast<size_t>(j)] = Quaternion(psi[k][j]) - factor * psi[0][j];
  }
  return QuaternionField(
      "z" + std::to_string(k),
      [psi, k, factor](const Quaternion& x) {
        const PsiCoords c = psi_coords(x, psi);
        return Quaternion(c[k]) - factor * c[0];
      },
      [jac](const Quaternion&) { return jac; }, Annihilator::psi_fueter_left);
}

QuaternionField random_polynomial(Rng& rng, double scale) {
  struct Coeffs {
    Quaternion a;
    std::array<Quaternion, 4> b;
    std::array<std::array<Quaternion, 4>, 4> c;  // upper triangle used
  };
  Coeffs co;
  co.a = scale * rng.quaternion();
  for (auto& b : co.b) b = scale * rng.quaternion();
  for (size_t j = 0; j < 4; ++j)
    for (size_t k = j; k < 4; ++k) co.c[j][k] = scale * rng.quaternion();
  return QuaternionField(
      "polynomial",
      [co](const Quaternion& x) {
        Quaternion v = co.a;
        for (size_t j = 0; j < 4; ++j) {
          const double xj = x[static_cast<int>(j)];
          v += xj * co.b[j];
          for (size_t k = j; k < 4; ++k) {
            v += (xj * x[static_cast<int>(k)]) * co.c[j][k];
          }
        }
        return v;
      },
      [co](const Quaternion& x) {
        Jacobian d;
        for (size_t m = 0; m < 4; ++m) {
          Quaternion v = co.b[m];
          for (size_t j = 0; j < 4; ++j) {
            const double xj = x[static_cast<int>(j)];
            if (j < m) v += xj * co.c[j][m];
            if (j > m) v += xj * co.c[m][j];
            if (j == m) v += 2.0 * xj * co.c[m][m];
          }
          d[m] = v;
        }
        return d;
      });
}

QuaternionField exp_weighted(const QuaternionField& g, const Quaternion& p,
                             const StructuralSet& psi) {
  if (p == Quaternion{}) return g;
  // D(e^P g) = e^P (p g + D g): a g killed by D + s gives e^P g killed by
  // D + (s - p), on either side.
  Annihilator tag = g.annihilator();
  const Quaternion pert = g.perturbation() - p;
  if (tag == Annihilator::psi_fueter_left ||
      tag == Annihilator::q_psi_fueter_left) {
    tag = Annihilator::q_psi_fueter_left;
  } else if (tag == Annihilator::psi_fueter_right ||
             tag == Annihilator::q_psi_fueter_right) {
    tag = Annihilator::q_psi_fueter_right;
  }
  QuaternionField::Partials partials;
  if (g.has_partials()) {
    partials = [g, p, psi](const Quaternion& x) {
      const double w = std::exp(pairing(p, x, psi));
      const Quaternion gx = g(x);
      Jacobian dg = g.partials(x);
      for (int j = 0; j < 4; ++j) {
        auto& dj = dg[static_cast<size_t>(j)];
        dj = w * (p[j] * gx + dj);
      }
      return dg;
    };
  }
  std::ostringstream label;
  label << "exp<" << p << ",x>*" << g.label();
  return QuaternionField(
      label.str(),
      [g, p, psi](const Quaternion& x) {
        return std::exp(pairing(p, x, psi)) * g(x);
      },
      std::move(partials), tag, tag == Annihilator::none ? Quaternion{} : pert);
}

QuaternionField exp_modulate(const QuaternionField& g, const Quaternion& q,
                             const StructuralSet& psi) {
  if (q == Quaternion{}) return g;
  QuaternionField f = exp_weighted(g, -q, psi);
  std::ostringstream label;
  label << "exp(-<" << q << ",x>)*" << g.label();
  return f.relabeled(label.str());
}

QuaternionField kernel_field(const Quaternion& pole, const Quaternion& q,
                             const StructuralSet& psi) {
  std::ostringstream label;
  label << "K(" << pole << "-x)";
  return QuaternionField(
      label.str(),
      [pole, q, psi](const Quaternion& x) {
        return cauchy_kernel_q(pole, x, q, psi);
      },
      [pole, q, psi](const Quaternion& x) {
        // d/dx_j = -d/du_j at u = pole - x; u is its own psi-recoordinatization.
        const Quaternion u = pole - x;
        const double r2 = norm2(u);
        if (r2 == 0.0) throw SingularityError("kernel field at its pole");
        const double w = std::exp(pairing(q, u, psi)) * kCauchyNormalization;
        const Quaternion k = w * conj(u) / (r2 * r2);
        Jacobian d;
        for (int j = 0; j < 4; ++j) {
          const Quaternion du =
              w * (conj(Quaternion::unit(j)) / (r2 * r2) -
                   (4.0 * u[j] / (r2 * r2 * r2)) * conj(u));
          d[static_cast<size_t>(j)] = -(q[j] * k + du);
        }
        return d;
      },
      Annihilator::q_psi_fueter_left, q);
}

QuaternionField right_combination(std::span<const QuaternionField> fields,
                                  std::span<const Quaternion> coeffs,
                                  std::string label) {
  if (fields.size() != coeffs.size()) {
    throw InvalidArgument("right_combination: size mismatch");
  }
  std::vector<QuaternionField> fs(fields.begin(), fields.end());
  std::vector<Quaternion> cs(coeffs.begin(), coeffs.end());
  bool all_partials = true;
  for (const auto& f : fs) all_partials = all_partials && f.has_partials();
  QuaternionField::Partials partials;
  if (all_partials) {
    partials = [fs, cs](const Quaternion& x) {
      Jacobian d{};
      for (size_t i = 0; i < fs.size(); ++i) {
        const Jacobian di = fs[i].partials(x);
        for (size_t j = 0; j < 4; ++j) d[j] += di[j] * cs[i];
      }
      return d;
    };
  }
  // Right coefficients preserve the left annihilator shared by all terms.
  Annihilator tag = fs.empty() ? Annihilator::none : fs.front().annihilator();
  Quaternion pert = fs.empty() ? Quaternion{} : fs.front().perturbation();
  for (const auto& f : fs) {
    if (f.annihilator() != tag || !(f.perturbation() == pert)) {
      tag = Annihilator::none;
    }
  }
  if (tag != Annihilator::psi_fueter_left &&
      tag != Annihilator::q_psi_fueter_left) {
    tag = Annihilator::none;
  }
  return QuaternionField(
      std::move(label),
      [fs, cs](const Quaternion& x) {
        Quaternion v;
        for (size_t i = 0; i < fs.size(); ++i) v += fs[i](x) * cs[i];
        return v;
      },
      std::move(partials), tag, tag == Annihilator::none ? Quaternion{} : pert);
}

QuaternionField difference(const QuaternionField& f, const QuaternionField& g) {
  QuaternionField::Partials partials;
  if (f.has_partials() && g.has_partials()) {
    partials = [f, g](const Quaternion& x) {
      Jacobian a = f.partials(x);
      const Jacobian b = g.partials(x);
      for (size_t j = 0; j < 4; ++j) a[j] -= b[j];
      return a;
    };
  }
  return QuaternionField(
      f.label() + "-" + g.label(),
      [f, g](const Quaternion& x) { return f(x) - g(x); }, std::move(partials));
}

namespace {

OperatorKind kind_for(const QuaternionField& f) {
  switch (f.annihilator()) {
    case Annihilator::psi_fueter_left: return OperatorKind::left();
    case Annihilator::q_psi_fueter_left:
      return OperatorKind::left(f.perturbation());
    case Annihilator::psi_fueter_right: return OperatorKind::right();
    case Annihilator::q_psi_fueter_right:
      return OperatorKind::right(f.perturbation());
    case Annihilator::none: break;
  }
  return OperatorKind::left();
}

}  // namespace

CertificationResult certify(const QuaternionField& f, const StructuralSet& psi,
                            const CertificationOptions& options,
                            std::span<const Quaternion> poles) {
  CertificationResult result;
  if (f.annihilator() == Annihilator::none) return result;
  if (options.samples < 1 || !(options.radius > 0.0)) {
    throw InvalidArgument("certification needs samples >= 1 and radius > 0");
  }
  Rng rng(options.seed);
  const OperatorKind kind = kind_for(f);
  const DiffOptions diff{options.h, DerivativeMode::finite_difference, false};
  for (int s = 0; s < options.samples; ++s) {
    Quaternion x;
    for (int attempt = 0;; ++attempt) {
      x = rng.in_ball(options.center, options.radius);
      bool clear = true;
      for (const auto& p : poles) {
        clear = clear && norm(x - p) >= options.pole_clearance;
      }
      if (clear) break;
      if (attempt > 1000) {
        throw InvalidArgument("certification ball is covered by poles");
      }
    }
    const double r = norm(apply(kind, f, x, psi, diff)) / (1.0 + norm(f(x)));
    if (r > result.max_residual) {
      result.max_residual = r;
      result.worst_point = x;
    }
  }
  result.pass = result.max_residual <= options.tolerance;
  return result;
}

Dictionary build_dictionary(const StructuralSet& psi, const Quaternion& q,
                            std::span<const Quaternion> poles, bool degree_one,
                            const CertificationOptions& options) {
  Dictionary d;
  d.psi = psi;
  d.q = q;
  d.poles.assign(poles.begin(), poles.end());
  d.degree_one = degree_one;
  d.entries.push_back(exp_modulate(constant_field(1.0), q, psi));
  if (degree_one) {
    for (int k = 1; k <= 3; ++k) {
      d.entries.push_back(exp_modulate(fueter_variable(k, psi), q, psi));
    }
  }
  for (const auto& p : poles) d.entries.push_back(kernel_field(p, q, psi));
  for (const auto& e : d.entries) {
    const CertificationResult r = certify(e, psi, options, poles);
    if (!r.pass) {
      std::ostringstream msg;
      msg << "dictionary entry '" << e.label()
          << "' failed certification: residual " << r.max_residual;
      throw CertificationError(msg.str(), e.label(), r.max_residual);
    }
  }
  return d;
}

nlohmann::json to_json(const Quaternion& q) {
  return nlohmann::json::array({q.q0, q.q1, q.q2, q.q3});
}

Quaternion quaternion_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Quaternion(j.get<double>());
  if (!j.is_array() || j.size() != 4) {
    throw InvalidArgument("quaternion must be a number or an array of 4");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
          j[3].get<double>()};
}

nlohmann::json to_json(const StructuralSet& psi) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& e : psi.elements()) a.push_back(to_json(e));
  return a;
}

StructuralSet structural_set_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "cimmino" || s == "default") return StructuralSet::cimmino();
    if (s == "standard") return StructuralSet::standard();
    throw InvalidArgument("unknown structural set '" + s + "'");
  }
  if (!j.is_array() || j.size() != 4) {
    throw InvalidArgument("structural set must be a name or 4 quaternions");
  }
  std::array<Quaternion, 4> e;
  for (size_t k = 0; k < 4; ++k) e[k] = quaternion_from_json(j[k]);
  return StructuralSet(e);
}

nlohmann::json to_json(const Dictionary& d) {
  nlohmann::json poles = nlohmann::json::array();
  for (const auto& p : d.poles) poles.push_back(to_json(p));
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& e : d.entries) labels.push_back(e.label());
  return {{"psi", to_json(d.psi)},
          {"q", to_json(d.q)},
          {"poles", poles},
          {"degree_one", d.degree_one},
          {"labels", labels}};
}

Dictionary dictionary_from_json(const nlohmann::json& j,
                                const CertificationOptions& options) {
  const StructuralSet psi = j.contains("psi")
                                ? structural_set_from_json(j["psi"])
                                : StructuralSet::cimmino();
  const Quaternion q = j.contains("q") ? quaternion_from_json(j["q"])
                                       : Quaternion{};
  std::vector<Quaternion> poles;
  if (j.contains("poles")) {
    for (const auto& p : j["poles"]) poles.push_back(quaternion_from_json(p));
  }
  return build_dictionary(psi, q, poles, j.value("degree_one", true), options);
}

}  // namespace hyperholo
