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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "hyperholo/quaternion.hpp"

namespace hyperholo {

/// Seeded generator with distributions written out by hand so that sample
/// streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (one value per call, no caching).
  double normal();

  Quaternion quaternion(double lo = -1.0, double hi = 1.0);
  Quaternion normal_quaternion();
  Quaternion unit_quaternion();

  /// Uniform in the 4-ball of given center and radius.
  Quaternion in_ball(const Quaternion& center, double radius);

  /// Uniform in the shell r_min <= |x - center| <= r_max.
  Quaternion in_shell(const Quaternion& center, double r_min, double r_max);

 private:
  std::mt19937_64 engine_;
};

/// Stable 64-bit FNV-1a; used to derive per-check seeds from names.
std::uint64_t stable_hash(std::string_view s);

/// Pairwise (cascade) summation. The split points depend only on the
/// length, so results are run-to-run identical.
double pairwise_sum(std::span<const double> v);
Quaternion pairwise_sum(std::span<const Quaternion> v);

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on P_n).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// Calls body(begin, end) over disjoint chunks of [0, n), on worker threads
/// when n is large. Bodies must only write to their own index range.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hyperholo
