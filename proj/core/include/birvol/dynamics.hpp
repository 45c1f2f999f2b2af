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

#ifndef BIRVOL_DYNAMICS_HPP_
#define BIRVOL_DYNAMICS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "birvol/lattice_model.hpp"

namespace birvol::dynamics {

enum class Letter { t1, t2, f, f_inv };
using Word = std::vector<Letter>;

// Words are written as the concatenation of the tokens "t1", "t2", "f" and
// "fi" (f inverse). Letters act left to right: "t1t2" applies t1 first, so
// "t1t2" is the matrix t2 * t1 = f.
std::string format_word(const Word& word);
Word parse_word(std::string_view text);

IntMat2 letter_matrix(const ConeModel& model, Letter letter);
IntMat2 word_matrix(const ConeModel& model, const Word& word);

template <class S>
DivisorClass<S> apply(const ConeModel& model, const Word& word, const DivisorClass<S>& d);

template <class S>
struct EigenCoords {
  S a1;
  S a2;
};

// d = a1 R1 + a2 R2.
template <class S>
EigenCoords<S> eigen_coords(const ConeModel& model, const DivisorClass<S>& d);

template <class S>
struct LCoords {
  S l1;  // a1 * a2, invariant under the action
  S l2;  // a1 / a2, multiplied by lambda^2 under the action
};

// Requires d in the open movable cone; the error names the non-positive
// eigen-coordinate.
template <class S>
LCoords<S> l_coords(const ConeModel& model, const DivisorClass<S>& d);

enum class Membership { nef_chamber, movable_interior, extremal_ray, exterior };
std::string_view to_string(Membership m);

// extremal_ray covers the whole boundary of the closed movable cone,
// including the zero class.
template <class S>
Membership membership(const ConeModel& model, const DivisorClass<S>& d);

template <class S>
struct ReductionResult {
  Word word;             // apply(word, reduced) reproduces the input
  DivisorClass<S> reduced;
  std::size_t chamber = 0;  // index into model.core_chambers()
  long power = 0;           // input = action^power * reduced
  bool certified = true;    // false for floating classes
};

// Brings a class of the open movable cone into the core region (the declared
// chambers and, with generators, their t1-images) by a power of the action.
//
// With wall-reflection generators the power is found by the reflection sign
// test (t1 while the H2-coordinate is negative, t2 while the H1-coordinate
// is); otherwise by an exact search around the L2 estimate. Ties on shared
// walls go to the lower chamber index.
template <class S>
ReductionResult<S> reduce_to_core(const ConeModel& model, const DivisorClass<S>& d);

// 2 + ceil(|log L2| / log lambda^2) + 2: bound on |power| for reduce_to_core.
long power_bound(const ConeModel& model, double log_l2);

inline constexpr double kFloatSignTolerance = 1e-12;

}  // namespace birvol::dynamics

#endif  // BIRVOL_DYNAMICS_HPP_
