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

#include "birvol/errors.hpp"

namespace birvol {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::disc_mismatch: return "disc_mismatch";
    case ErrorCode::invalid_disc: return "invalid_disc";
    case ErrorCode::float_overflow: return "float_overflow";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::bad_dimension: return "bad_dimension";
    case ErrorCode::bad_determinant: return "bad_determinant";
    case ErrorCode::not_hyperbolic: return "not_hyperbolic";
    case ErrorCode::not_involution: return "not_involution";
    case ErrorCode::bad_chamber: return "bad_chamber";
    case ErrorCode::bad_ample: return "bad_ample";
    case ErrorCode::inconsistent_model: return "inconsistent_model";
    case ErrorCode::rays_not_fixed: return "rays_not_fixed";
    case ErrorCode::missing_generators: return "missing_generators";
    case ErrorCode::outside_cone: return "outside_cone";
    case ErrorCode::negative_nef_coordinate: return "negative_nef_coordinate";
    case ErrorCode::uncovered_class: return "uncovered_class";
    case ErrorCode::hypothesis_violation: return "hypothesis_violation";
    case ErrorCode::degenerate_series: return "degenerate_series";
    case ErrorCode::bad_signature: return "bad_signature";
    case ErrorCode::negative_q: return "negative_q";
    case ErrorCode::not_boundary_class: return "not_boundary_class";
    case ErrorCode::hodge_degenerate: return "hodge_degenerate";
  }
  return "unknown";
}

}  // namespace birvol
