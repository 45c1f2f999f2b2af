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

#ifndef BIRVOL_HK_HPP_
#define BIRVOL_HK_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "birvol/exactnum.hpp"

namespace birvol::hk {

using Vec = std::vector<Rational>;

// Neron-Severi lattice with its quadratic form q and Fujiki constant c_X, so
// that vol(D) = c_X q(D)^d on a manifold of dimension 2d.
class HKModel {
 public:
  // Throws unless gram is symmetric of signature (1, rho - 1), c_X > 0, d >= 1.
  HKModel(std::vector<std::vector<BigInt>> gram, Rational c_x, int d);

  std::size_t rho() const { return gram_.size(); }
  const std::vector<std::vector<BigInt>>& gram() const { return gram_; }
  const Rational& c_x() const { return c_x_; }
  int d() const { return d_; }

 private:
  std::vector<std::vector<BigInt>> gram_;
  Rational c_x_;
  int d_;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Inertia of a symmetric rational matrix by exact congruence diagonalization.
Signature signature(const std::vector<std::vector<BigInt>>& gram);

Rational q_eval(const HKModel& model, const Vec& d);
Rational q_pair(const HKModel& model, const Vec& d, const Vec& a);

enum class HKClass { big, boundary_non_big, invalid };
std::string_view to_string(HKClass c);

// Assumes d is in the closed movable cone; invalid means q(d) < 0
// contradicts that assumption.
HKClass classify(const HKModel& model, const Vec& d);

Rational vol_hk(const HKModel& model, const Vec& d);

struct BoundaryGrowth {
  int exponent = 0;
  std::vector<Rational> poly;  // poly[i] is the coefficient of m^i in vol(mD + A)
  std::string note;
};

BoundaryGrowth kappa_boundary(const HKModel& model, const Vec& d, const Vec& a);

Rational eval_poly(const std::vector<Rational>& poly, const Rational& m);

struct Fixture {
  HKModel model;
  Vec d;  // isotropic
  Vec a;  // q(a) > 0, q(d, a) > 0
};

// Hyperbolic plane plus a negative definite diagonal part, in random
// unimodular coordinates. rho ranges over 2..4.
Fixture random_fixture(std::uint64_t seed);

nlohmann::json to_json(const HKModel& model);
HKModel hk_from_json(const nlohmann::json& doc);
Vec vec_from_text(std::string_view text, std::size_t rho, const std::string& path);

}  // namespace birvol::hk

#endif  // BIRVOL_HK_HPP_
