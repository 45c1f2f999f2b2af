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

#ifndef BIRVOL_CLI_SAMPLERS_HPP_
#define BIRVOL_CLI_SAMPLERS_HPP_

#include <cstdint>
#include <random>

#include "birvol/dynamics.hpp"
#include "birvol/lattice_model.hpp"
#include "birvol/volume.hpp"

namespace birvol::cli {

// mt19937_64 output is fixed by the standard; the range mapping here is too,
// unlike std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    const std::int64_t q = uniform(1, max_den);
    return Rational(BigInt(std::to_string(uniform(lo * q, hi * q))), BigInt(std::to_string(q)));
  }

 private:
  std::mt19937_64 gen_;
};

// Integer class in the open movable cone, by rejection from a box.
ExactClass random_integer_movable(const ConeModel& model, Rng& rng, std::int64_t box = 60);

// Either an integer class or a positive rational combination of R1 and R2.
ExactClass random_movable_class(const ConeModel& model, Rng& rng);

dynamics::Word random_word(const ConeModel& model, Rng& rng, std::size_t max_len);

volume::DivisorExpression random_expression(const ConeModel& model, Rng& rng);

// Ample class whose eigen-coordinates both exceed bound.
ExactClass ample_above(const ConeModel& model, const QuadExt& bound, Rng& rng);

}  // namespace birvol::cli

#endif  // BIRVOL_CLI_SAMPLERS_HPP_
