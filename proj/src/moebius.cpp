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

#include "hyperholo/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperholo/error.hpp"

namespace hyperholo {

const char* to_string(BExponent e) {
  return e == BExponent::plus_four ? "+4" : "-4";
}

MoebiusMap::MoebiusMap(const Quaternion& a, const Quaternion& b,
                       const Quaternion& c, const Quaternion& d)
    : a_(a), b_(b), c_(c), d_(d), affine_(c == Quaternion{}) {
  if (affine_) {
    if (a == Quaternion{} || d == Quaternion{}) {
      throw InvalidArgument("affine Moebius map needs a != 0 and d != 0");
    }
    return;
  }
  ac_inv_ = a * hyperholo::inverse(c);
  v_ = b - ac_inv_ * d;
  if (norm(v_) == 0.0) {
    throw InvalidArgument("Moebius map needs b - a c^{-1} d != 0");
  }
}

Quaternion MoebiusMap::operator()(const Quaternion& x) const {
  const Quaternion den = c_ * x + d_;
  if (norm2(den) == 0.0) throw PoleOfMapError("c x + d = 0");
  return (a_ * x + b_) * hyperholo::inverse(den);
}

Quaternion MoebiusMap::inverse(const Quaternion& y) const {
  const Quaternion den = a_ - y * c_;
  if (norm2(den) == 0.0) throw PoleOfMapError("a - y c = 0");
  return hyperholo::inverse(den) * (y * d_ - b_);
}

double MoebiusMap::scale(const Quaternion& x) const {
  if (affine_) return norm(a_) / norm(d_);
  const double w2 = norm2(c_ * x + d_);
  if (w2 == 0.0) throw PoleOfMapError("c x + d = 0");
  return norm(v_) * norm(c_) / w2;
}

nlohmann::json MoebiusMap::to_json() const {
  return {{"a", hyperholo::to_json(a_)},
          {"b", hyperholo::to_json(b_)},
          {"c", hyperholo::to_json(c_)},
          {"d", hyperholo::to_json(d_)}};
}

MoebiusMap MoebiusMap::from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    if (j.size() != 16) throw InvalidArgument("map needs 16 numbers");
    std::array<Quaternion, 4> q;
    for (size_t i = 0; i < 4; ++i) {
      for (size_t k = 0; k < 4; ++k) {
        q[i][static_cast<int>(k)] = j[4 * i + k].get<double>();
      }
    }
    return {q[0], q[1], q[2], q[3]};
  }
  auto get = [&](const char* key, double fallback) {
    return j.contains(key) ? quaternion_from_json(j[key]) : Quaternion(fallback);
  };
  return {get("a", 1.0), get("b", 0.0), get("c", 0.0), get("d", 1.0)};
}

ApplyInvert apply_and_invert(const MoebiusMap& t, const Quaternion& x) {
  const Quaternion y = t(x);
  return {y, t.inverse(y)};
}

namespace {

// c x V^{-1} + d V^{-1}.
Quaternion normalized_denominator(const MoebiusMap& t, const Quaternion& x) {
  const Quaternion vinv = inverse(t.v());
  const Quaternion u = t.c() * x * vinv + t.d() * vinv;
  if (norm2(u) == 0.0) throw PoleOfMapError("c x V^{-1} + d V^{-1} = 0");
  return u;
}

Quaternion coefficient_a(const MoebiusMap& t, const Quaternion& x) {
  if (t.affine()) return conj(t.d());
  const Quaternion u = normalized_denominator(t, x);
  const double n2 = norm2(u);
  return conj(t.v()) * conj(u) / (n2 * n2);
}

Quaternion coefficient_c(const MoebiusMap& t, const Quaternion& x) {
  if (t.affine()) {
    return (norm2(t.a()) / norm(t.d())) * inverse(t.d());
  }
  const Quaternion u = normalized_denominator(t, x);
  const double n2 = norm2(u);
  return (norm2(t.c()) / norm(t.v())) * inverse(t.v()) * conj(u) / (n2 * n2);
}

double coefficient_rho(const MoebiusMap& t, const Quaternion& x) {
  if (t.affine()) return 1.0;
  return 1.0 / norm2(normalized_denominator(t, x));
}

Quaternion offset_from_center(const MoebiusMap& t, const Quaternion& y) {
  const Quaternion w = y - t.center();
  if (norm(w) < kCenterClearance) {
    throw PoleOfMapError("y is within clearance of a c^{-1}");
  }
  return w;
}

Quaternion coefficient_b(const MoebiusMap& t, const Quaternion& y,
                         BExponent exponent) {
  if (t.affine()) return conj(t.a());
  const Quaternion w = offset_from_center(t, y);
  const double p = exponent == BExponent::plus_four ? 4.0 : -4.0;
  return -(conj(t.c()) * conj(w)) * std::pow(norm(w), p);
}

}  // namespace

Quaternion a_coefficient(const MoebiusMap& t, const Quaternion& x) {
  return coefficient_a(t, x);
}

Quaternion c_coefficient(const MoebiusMap& t, const Quaternion& x) {
  return coefficient_c(t, x);
}

double rho_coefficient(const MoebiusMap& t, const Quaternion& x) {
  return coefficient_rho(t, x);
}

Quaternion delta_coefficient(const MoebiusMap& t, const Quaternion& r,
                             const Quaternion& y) {
  if (t.affine()) return inverse(conj(t.a())) * r * conj(t.d());
  const Quaternion w = offset_from_center(t, y);
  const double w2 = norm2(w);
  return -(w * t.c() * r * conj(t.v()) * w) / (norm2(t.c()) * w2 * w2);
}

ConformalCoefficients coefficients(const MoebiusMap& t, const Quaternion& r,
                                   const Quaternion& q, const Quaternion& point,
                                   PointSide side, const StructuralSet& psi,
                                   BExponent exponent) {
  ConformalCoefficients k;
  if (side == PointSide::domain_x) {
    k.x = point;
    k.y = t(point);
  } else {
    k.y = point;
    k.x = t.inverse(point);
  }
  k.a = coefficient_a(t, k.x);
  k.c = coefficient_c(t, k.x);
  k.rho = coefficient_rho(t, k.x);
  k.b = coefficient_b(t, k.y, exponent);
  k.delta = delta_coefficient(t, r, k.y);
  k.gamma = std::exp(2.0 * pairing(r - q, k.x, psi));
  return k;
}

QuaternionField pullback(const MoebiusMap& t, const Quaternion& r,
                         const Quaternion& q, const QuaternionField& f,
                         PullbackKind kind, const StructuralSet& psi) {
  const bool use_a = kind == PullbackKind::a;
  // Both coefficients are real multiples of each other, so either pullback
  // of a delta-solution solves the q-perturbed system.
  const bool solution =
      f.annihilator() == Annihilator::q_psi_fueter_left ||
      f.annihilator() == Annihilator::psi_fueter_left;
  const bool tagged = solution && t.affine() &&
                      max_abs_diff(f.perturbation(),
                                   delta_coefficient(t, r, 0.0)) < 1e-14;
  return QuaternionField(
      std::string(use_a ? "A" : "C") + "-pullback[" + f.label() + "]",
      [t, r, q, f, use_a, psi](const Quaternion& x) {
        const Quaternion coef =
            use_a ? coefficient_a(t, x) : coefficient_c(t, x);
        return std::exp(pairing(r - q, x, psi)) * coef * f(t(x));
      },
      {}, tagged ? Annihilator::q_psi_fueter_left : Annihilator::none,
      tagged ? q : Quaternion{});
}

QuaternionField pushforward(const MoebiusMap& t, const Quaternion& r,
                            const Quaternion& q, const QuaternionField& g,
                            const StructuralSet& psi) {
  return QuaternionField(
      "pushforward[" + g.label() + "]",
      [t, r, q, g, psi](const Quaternion& y) {
        const Quaternion x = t.inverse(y);
        return std::exp(-pairing(r - q, x, psi)) *
               inverse(coefficient_a(t, x)) * g(x);
      });
}

double delta_residual(const MoebiusMap& t, const Quaternion& r,
                      const QuaternionField& f, const Quaternion& y,
                      const StructuralSet& psi, double h) {
  const DiffOptions diff{h, DerivativeMode::finite_difference, false};
  const Quaternion fy = f(y);
  const Quaternion d = apply(OperatorKind::left(), f, y, psi, diff) +
                       delta_coefficient(t, r, y) * fy;
  return norm(d) / (1.0 + norm(fy));
}

CovarianceSides covariance_sides(const MoebiusMap& t, const Quaternion& r,
                                 const Quaternion& q, const QuaternionField& f,
                                 const Quaternion& x, const StructuralSet& psi,
                                 double h, BExponent exponent) {
  const DiffOptions diff{h, DerivativeMode::finite_difference, false};
  const QuaternionField g = pullback(t, r, q, f, PullbackKind::a, psi);
  CovarianceSides s;
  s.lhs = apply(OperatorKind::left(q), g, x, psi, diff);
  const ConformalCoefficients k =
      coefficients(t, r, q, x, PointSide::domain_x, psi, exponent);
  const Quaternion df = apply(OperatorKind::left(k.delta), f, k.y, psi, diff);
  s.rhs = std::exp(pairing(r - q, x, psi)) * k.b * df;
  const double scale = std::max({norm(s.lhs), norm(s.rhs), 1e-300});
  s.relative = norm(s.lhs - s.rhs) / scale;
  return s;
}

Report covariance_check(const MoebiusMap& t, const Quaternion& r,
                        const Quaternion& q, const QuaternionField& f,
                        const Quaternion& x, const StructuralSet& psi,
                        double h, BExponent exponent, double tolerance) {
  const CovarianceSides s = covariance_sides(t, r, q, f, x, psi, h, exponent);
  Report rep("covariance", tolerance);
  rep.params = {{"map", t.to_json()},   {"r", to_json(r)},
                {"q", to_json(q)},      {"x", to_json(x)},
                {"f", f.label()},       {"h", h},
                {"b_exponent", to_string(exponent)}};
  rep.add("relative", s.relative);
  rep.diagnostics["lhs"] = to_json(s.lhs);
  rep.diagnostics["rhs"] = to_json(s.rhs);
  return rep.finalize();
}

std::vector<CovarianceSample> covariance_samples(Rng& rng, int count,
                                                 bool affine) {
  std::vector<CovarianceSample> out;
  out.reserve(static_cast<size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const Quaternion a = rng.normal_quaternion();
    const Quaternion b = rng.normal_quaternion();
    const Quaternion c = affine ? Quaternion{} : rng.normal_quaternion();
    const Quaternion d = rng.normal_quaternion();
    const Quaternion r = 0.5 * rng.quaternion();
    const Quaternion q = 0.5 * rng.quaternion();
    const Quaternion x = rng.in_ball({}, 0.5);
    if (norm(a) < 0.2 || norm(d) < 0.2) continue;
    if (!affine) {
      if (norm(c) < 0.2) continue;
      const MoebiusMap t(a, b, c, d);
      // Stay clear of the pole of T and of the image of infinity.
      if (norm(t.v()) < 0.2) continue;
      if (norm(c * x + d) < 0.3) continue;
      if (norm(t(x) - t.center()) < 0.05) continue;
      if (norm(t(x)) > 20.0) continue;
    }
    QuaternionField f = random_polynomial(rng);
    out.push_back({MoebiusMap(a, b, c, d), r, q, std::move(f), x});
  }
  return out;
}

Report exponent_study(std::span<const CovarianceSample> samples,
                      const StructuralSet& psi, double h, double tolerance) {
  Report rep("covariance-exponent", tolerance);
  double worst[2] = {0.0, 0.0};
  const BExponent conv[2] = {BExponent::plus_four, BExponent::minus_four};
  for (const auto& s : samples) {
    for (int i = 0; i < 2; ++i) {
      worst[i] = std::max(worst[i], covariance_sides(s.map, s.r, s.q, s.f,
                                                     s.x, psi, h, conv[i])
                                        .relative);
    }
  }
  const bool pass_plus = worst[0] <= tolerance;
  const bool pass_minus = worst[1] <= tolerance;
  rep.params = {{"samples", samples.size()}, {"h", h}};
  rep.diagnostics["max_relative_plus_four"] = worst[0];
  rep.diagnostics["max_relative_minus_four"] = worst[1];
  rep.diagnostics["passing_convention"] =
      pass_plus && !pass_minus   ? "+4"
      : pass_minus && !pass_plus ? "-4"
      : pass_plus                ? "both"
                                 : "neither";
  rep.add("best_convention_relative", std::min(worst[0], worst[1]));
  const double passing = (pass_plus ? 1.0 : 0.0) + (pass_minus ? 1.0 : 0.0);
  rep.add("passing_count_defect", std::fabs(passing - 1.0), 0.0);
  return rep.finalize();
}

}  // namespace hyperholo
