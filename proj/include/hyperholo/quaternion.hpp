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
#include <cmath>
#include <iosfwd>

namespace hyperholo {

/// Real quaternion q0 + q1 e1 + q2 e2 + q3 e3 with e1 e2 = e3, e2 e3 = e1,
/// e3 e1 = e2 and e_k^2 = -1. Also used as a point of R^4.
struct Quaternion {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a) : q0(a) {}  // NOLINT: reals embed into H
  constexpr Quaternion(double a, double b, double c, double d)
      : q0(a), q1(b), q2(c), q3(d) {}

  static constexpr Quaternion unit(int k) {
    Quaternion q;
    q[k] = 1.0;
    return q;
  }

  constexpr double& operator[](int k) {
    return k == 0 ? q0 : k == 1 ? q1 : k == 2 ? q2 : q3;
  }
  constexpr double operator[](int k) const {
    return k == 0 ? q0 : k == 1 ? q1 : k == 2 ? q2 : q3;
  }

  constexpr double real() const { return q0; }
  constexpr Quaternion vector_part() const { return {0.0, q1, q2, q3}; }
  constexpr std::array<double, 4> coords() const { return {q0, q1, q2, q3}; }

  constexpr Quaternion& operator+=(const Quaternion& r) {
    q0 += r.q0;
    q1 += r.q1;
    q2 += r.q2;
    q3 += r.q3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& r) {
    q0 -= r.q0;
    q1 -= r.q1;
    q2 -= r.q2;
    q3 -= r.q3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    q0 *= s;
    q1 *= s;
    q2 *= s;
    q3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&,
                                   const Quaternion&) = default;
};

inline constexpr Quaternion kE1{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kE2{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kE3{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) {
  return a += b;
}
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) {
  return a -= b;
}
constexpr Quaternion operator-(const Quaternion& a) {
  return {-a.q0, -a.q1, -a.q2, -a.q3};
}
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) {
  return a *= (1.0 / s);
}

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
          a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
          a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
          a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0};
}

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return a * b;
}

constexpr Quaternion conj(const Quaternion& q) {
  return {q.q0, -q.q1, -q.q2, -q.q3};
}

constexpr double norm2(const Quaternion& q) {
  return q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm2(q)); }

/// Euclidean dot product, (conj(a) b + conj(b) a) / 2.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.q0 * b.q0 + a.q1 * b.q1 + a.q2 * b.q2 + a.q3 * b.q3;
}

/// conj(q) / |q|^2. Throws ZeroDivisorError for q == 0.
Quaternion inverse(const Quaternion& q);

struct ConjNormInv {
  Quaternion conjugate;
  double modulus;
  Quaternion inverse;
};

/// Conjugate, modulus and inverse in one call; throws ZeroDivisorError
/// when inverting 0.
ConjNormInv conj_norm_inv(const Quaternion& q);

/// Largest coordinate difference; handy for tolerance checks.
inline double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  double m = 0.0;
  for (int k = 0; k < 4; ++k) m = std::fmax(m, std::fabs(a[k] - b[k]));
  return m;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace hyperholo
