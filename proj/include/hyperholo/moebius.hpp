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

#include <span>

#include "json.hpp"

#include "hyperholo/fields.hpp"
#include "hyperholo/operators.hpp"
#include "hyperholo/report.hpp"

namespace hyperholo {

/// Sign of the exponent on |y - a c^{-1}| in the c != 0 branch of B.
enum class BExponent { plus_four, minus_four };

const char* to_string(BExponent e);

/// x -> (a x + b)(c x + d)^{-1}.
class MoebiusMap {
 public:
  /// Throws InvalidArgument when c = 0 and (a = 0 or d = 0), or when
  /// c != 0 and b - a c^{-1} d = 0.
  MoebiusMap(const Quaternion& a, const Quaternion& b, const Quaternion& c,
             const Quaternion& d);

  static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static MoebiusMap translation(const Quaternion& b) { return {1.0, b, 0.0, 1.0}; }

  const Quaternion& a() const { return a_; }
  const Quaternion& b() const { return b_; }
  const Quaternion& c() const { return c_; }
  const Quaternion& d() const { return d_; }
  bool affine() const { return affine_; }
  /// b - a c^{-1} d (zero for affine maps).
  const Quaternion& v() const { return v_; }
  /// a c^{-1}, the image of infinity (zero for affine maps).
  const Quaternion& center() const { return ac_inv_; }

  /// Throws PoleOfMapError when c x + d = 0.
  Quaternion operator()(const Quaternion& x) const;
  /// (a - y c)^{-1}(y d - b). Throws PoleOfMapError when a - y c = 0.
  Quaternion inverse(const Quaternion& y) const;
  /// Conformal scale factor |T'(x)|.
  double scale(const Quaternion& x) const;

  nlohmann::json to_json() const;
  /// {"a":..,"b":..,"c":..,"d":..} or an array of 16 numbers.
  static MoebiusMap from_json(const nlohmann::json& j);

 private:
  Quaternion a_, b_, c_, d_, v_, ac_inv_;
  bool affine_;
};

struct ApplyInvert {
  Quaternion y;
  Quaternion x_back;
};

ApplyInvert apply_and_invert(const MoebiusMap& t, const Quaternion& x);

struct ConformalCoefficients {
  Quaternion a;      // A_T(x)
  Quaternion b;      // B_T(y)
  Quaternion c;      // C_T(x)
  double rho = 1.0;  // rho_T(x)
  Quaternion delta;  // delta_{T,r}(y)
  double gamma = 1.0;  // e^{2<r - q, x>_psi}
  Quaternion x;
  Quaternion y;
};

enum class PointSide { domain_x, codomain_y };

/// Minimum |y - a c^{-1}| at which B and delta are evaluated.
inline constexpr double kCenterClearance = 1e-6;

/// All coefficients at a matched pair y = T(x), given either x or y.
/// Throws PoleOfMapError on the singular loci.
ConformalCoefficients coefficients(const MoebiusMap& t, const Quaternion& r,
                                   const Quaternion& q, const Quaternion& point,
                                   PointSide side, const StructuralSet& psi,
                                   BExponent exponent = BExponent::plus_four);

/// Single coefficients at a domain point x.
Quaternion a_coefficient(const MoebiusMap& t, const Quaternion& x);
Quaternion c_coefficient(const MoebiusMap& t, const Quaternion& x);
double rho_coefficient(const MoebiusMap& t, const Quaternion& x);

/// The perturbation attached to the target space; depends on y unless the
/// map is affine.
Quaternion delta_coefficient(const MoebiusMap& t, const Quaternion& r,
                             const Quaternion& y);

enum class PullbackKind { a, c };

/// x -> e^{<r - q, x>_psi} coef(x) f(T(x)), coef = A_T or C_T.
QuaternionField pullback(const MoebiusMap& t, const Quaternion& r,
                         const Quaternion& q, const QuaternionField& f,
                         PullbackKind kind, const StructuralSet& psi);

/// Inverse of the A_T pullback: y -> A_T(x)^{-1} e^{-<r - q, x>} g(x) with
/// x = T^{-1}(y). Maps q-solutions to delta-solutions.
QuaternionField pushforward(const MoebiusMap& t, const Quaternion& r,
                            const Quaternion& q, const QuaternionField& g,
                            const StructuralSet& psi);

/// |D f(y) + delta(y) f(y)| / (1 + |f(y)|) by central differences.
double delta_residual(const MoebiusMap& t, const Quaternion& r,
                      const QuaternionField& f, const Quaternion& y,
                      const StructuralSet& psi, double h = 1e-4);

struct CovarianceSides {
  Quaternion lhs;
  Quaternion rhs;
  double relative = 0.0;  // |lhs - rhs| / max(|lhs|, |rhs|)
};

/// Left: perturbed operator applied to the A_T pullback at x. Right:
/// e^{<r-q,x>} B_T(T x) (D_delta f)(T x). Both by central differences.
CovarianceSides covariance_sides(const MoebiusMap& t, const Quaternion& r,
                                 const Quaternion& q, const QuaternionField& f,
                                 const Quaternion& x, const StructuralSet& psi,
                                 double h = 1e-4,
                                 BExponent exponent = BExponent::plus_four);

Report covariance_check(const MoebiusMap& t, const Quaternion& r,
                        const Quaternion& q, const QuaternionField& f,
                        const Quaternion& x, const StructuralSet& psi,
                        double h = 1e-4,
                        BExponent exponent = BExponent::plus_four,
                        double tolerance = 1e-5);

struct CovarianceSample {
  MoebiusMap map;
  Quaternion r;
  Quaternion q;
  QuaternionField f;
  Quaternion x;
};

/// Random (T, r, q, f, x); affine maps when `affine`, else c != 0 with x
/// kept away from the singular loci.
std::vector<CovarianceSample> covariance_samples(Rng& rng, int count,
                                                 bool affine);

/// Runs every sample under both exponent conventions and names the one
/// that passes. Residuals: the worst relative residual per convention;
/// the report passes iff exactly one convention passes on every sample.
Report exponent_study(std::span<const CovarianceSample> samples,
                      const StructuralSet& psi, double h = 1e-4,
                      double tolerance = 1e-5);

}  // namespace hyperholo
