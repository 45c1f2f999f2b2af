// Copyright 2026 The birvol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIRVOL_ERRORS_HPP_
#define BIRVOL_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace birvol {

// Every failure the library reports is one of these codes. Callers that need
// to tell two failures apart (tests, the CLI exit-code mapping) switch on the
// code rather than on message text.
enum class ErrorCode {
  division_by_zero,
  disc_mismatch,
  invalid_disc,
  float_overflow,
  parse_error,
  bad_dimension,
  bad_determinant,
  not_hyperbolic,
  not_involution,
  bad_chamber,
  bad_ample,
  inconsistent_model,
  rays_not_fixed,
  missing_generators,
  outside_cone,
  negative_nef_coordinate,
  uncovered_class,
  hypothesis_violation,
  degenerate_series,
  bad_signature,
  negative_q,
  not_boundary_class,
  hodge_degenerate,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A mathematical precondition of an operation does not hold.
class MathError : public Error {
 public:
  using Error::Error;
};

// Malformed input document. `path` is a JSON-pointer-like field path.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, std::string detail)
      : Error(ErrorCode::parse_error, path.empty() ? detail : path + ": " + detail),
        path_(std::move(path)),
        detail_(std::move(detail)) {}

  const std::string& path() const noexcept { return path_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string path_;
  std::string detail_;
};

}  // namespace birvol

#endif  // BIRVOL_ERRORS_HPP_
