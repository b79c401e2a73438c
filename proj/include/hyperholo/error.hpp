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

#include <stdexcept>
#include <string>

namespace hyperholo {

/// Error categories. The numeric values are shared with the C API.
enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 1,
  zero_divisor = 2,
  singularity = 3,
  pole_of_map = 4,
  too_close_to_boundary = 5,
  certification_failed = 6,
  config = 7,
  rank_mismatch = 8,
  internal = 99,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::invalid_argument, what) {}
};

class ZeroDivisorError : public Error {
 public:
  explicit ZeroDivisorError(const std::string& what)
      : Error(ErrorCode::zero_divisor, what) {}
};

/// Evaluation at a kernel pole (y == x) or a field's own singular point.
class SingularityError : public Error {
 public:
  explicit SingularityError(const std::string& what)
      : Error(ErrorCode::singularity, what) {}
};

/// Evaluation on the singular locus of a Moebius map or its coefficients.
class PoleOfMapError : public Error {
 public:
  explicit PoleOfMapError(const std::string& what)
      : Error(ErrorCode::pole_of_map, what) {}
};

class BoundaryDistanceError : public Error {
 public:
  explicit BoundaryDistanceError(const std::string& what)
      : Error(ErrorCode::too_close_to_boundary, what) {}
};

class CertificationError : public Error {
 public:
  CertificationError(const std::string& what, std::string entry,
                     double residual)
      : Error(ErrorCode::certification_failed, what),
        entry_(std::move(entry)),
        residual_(residual) {}

  const std::string& entry() const noexcept { return entry_; }
  double residual() const noexcept { return residual_; }

 private:
  std::string entry_;
  double residual_;
};

/// Experiment-config problems; `field` is a JSON-pointer-like path.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::string field = {})
      : Error(ErrorCode::config, field.empty() ? what : field + ": " + what),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class RankMismatchError : public Error {
 public:
  explicit RankMismatchError(const std::string& what)
      : Error(ErrorCode::rank_mismatch, what) {}
};

}  // namespace hyperholo
