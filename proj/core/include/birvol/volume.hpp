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

#ifndef BIRVOL_VOLUME_HPP_
#define BIRVOL_VOLUME_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "birvol/dynamics.hpp"
#include "birvol/exactnum.hpp"
#include "birvol/lattice_model.hpp"

namespace birvol::volume {

// Top self-intersection of a class given by its nef coordinates in the
// reference chamber. Throws if a coordinate is negative.
template <class S>
S vol_nef(const ConeModel& model, const DivisorClass<S>& d);

// Volume of d evaluated through core chamber `chamber` (d must lie in it).
template <class S>
S vol_in_chamber(const ConeModel& model, std::size_t chamber, const DivisorClass<S>& d);

template <class S>
struct MovableVolume {
  S vol;
  dynamics::Membership membership = dynamics::Membership::nef_chamber;
  dynamics::ReductionResult<S> reduction;  // empty on the extremal rays
};

template <class S>
MovableVolume<S> vol_movable_detail(const ConeModel& model, const DivisorClass<S>& d);

template <class S>
S vol_movable(const ConeModel& model, const DivisorClass<S>& d) {
  return vol_movable_detail(model, d).vol;
}

// Empirical sandwich constants: extremes of vol / L1^(n/2) over a log-spaced
// grid of L2 in [1, lambda^2] at L1 = 1.
struct Envelope {
  double c11 = 0;
  double c21 = 0;
  double l2_at_min = 0;
  double l2_at_max = 0;
  std::size_t points = 0;
};

Envelope sandwich_envelope(const ConeModel& model, std::size_t points = 10000);

struct Component {
  BigInt u;  // class of the prime component in (H1, H2) coordinates
  BigInt v;
  QuadExt coeff;
};

struct DivisorExpression {
  std::vector<Component> components;
};

ExactClass expression_class(const ConeModel& model, const DivisorExpression& expr);

struct FloorResult {
  ExactClass floor;          // sum of floor(e_i) P_i
  ExactClass perturbation;   // sum of frac(e_i) P_i
};

FloorResult floor_class(const ConeModel& model, const DivisorExpression& expr);

struct FloorConstants {
  QuadExt c;
  QuadExt c2;
  QuadExt c12;
  QuadExt c22;
};

FloorConstants floor_constants(const ConeModel& model, const DivisorExpression& expr);

struct Lemma44Report {
  ExactClass d;
  ExactClass floor;
  FloorConstants constants;
  QuadExt l1_d_plus_a;
  QuadExt l1_floor_plus_a;
  QuadExt lower;  // C12 * L1(D + A)
  QuadExt upper;  // C22 * L1(D + A)
  bool floor_plus_a_movable = false;
  bool pass = false;
};

Lemma44Report lemma44_check(const ConeModel& model, const DivisorExpression& expr, const ExactClass& a);

struct CsvRow {
  std::string model_id;
  double u = 0;
  double v = 0;
  double l1 = 0;
  double l2 = 0;
  double vol = 0;
  std::size_t word_length = 0;
};

inline constexpr const char* kCsvHeader = "model_id,u,v,L1,L2,vol,word_length";

CsvRow csv_row(const ConeModel& model, const ExactClass& d);

}  // namespace birvol::volume

#endif  // BIRVOL_VOLUME_HPP_
