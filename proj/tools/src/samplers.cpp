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

#include "birvol/cli/samplers.hpp"

#include "birvol/errors.hpp"

namespace birvol::cli {

ExactClass random_integer_movable(const ConeModel& model, Rng& rng, std::int64_t box) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const ExactClass d = exact_class(Rational(rng.uniform(-box, box)), Rational(rng.uniform(-box, box)), model.disc());
    const auto m = dynamics::membership(model, d);
    if (m == dynamics::Membership::nef_chamber || m == dynamics::Membership::movable_interior) return d;
  }
  throw MathError(ErrorCode::uncovered_class, "no integer movable class found in the sampling box");
}

ExactClass random_movable_class(const ConeModel& model, Rng& rng) {
  if (rng.uniform(0, 1) == 0) return random_integer_movable(model, rng);
  const QuadExt a1 = model.constant(rng.rational(1, 50, 9));
  const QuadExt a2 = model.constant(rng.rational(1, 50, 9));
  return {a1 * model.r1().u + a2 * model.r2().u, a1 * model.r1().v + a2 * model.r2().v};
}

dynamics::Word random_word(const ConeModel& model, Rng& rng, std::size_t max_len) {
  const auto len = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_len)));
  dynamics::Word w;
  for (std::size_t i = 0; i < len; ++i) {
    if (!model.has_generators()) {
      w.push_back(rng.uniform(0, 1) == 0 ? dynamics::Letter::f : dynamics::Letter::f_inv);
      continue;
    }
    switch (rng.uniform(0, 3)) {
      case 0: w.push_back(dynamics::Letter::t1); break;
      case 1: w.push_back(dynamics::Letter::t2); break;
      case 2: w.push_back(dynamics::Letter::f); break;
      default: w.push_back(dynamics::Letter::f_inv); break;
    }
  }
  return w;
}

volume::DivisorExpression random_expression(const ConeModel& model, Rng& rng) {
  volume::DivisorExpression expr;
  const auto n = rng.uniform(1, 4);
  for (std::int64_t i = 0; i < n; ++i) {
    const ExactClass p = random_integer_movable(model, rng, 12);
    QuadExt coeff = model.constant(rng.rational(0, 6, 8));
    if (rng.uniform(0, 3) == 0) {
      // r + s sqrt(d) with r >= |s| * ceil(sqrt(d)) stays nonnegative.
      const Rational s = rng.rational(-2, 2, 5);
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), BigInt(std::to_string(model.disc())).get_mpz_t());
      const Rational r = s.abs() * Rational(root + 1) + rng.rational(0, 3, 4);
      coeff = QuadExt(r, s, model.disc());
    }
    expr.components.push_back({p.u.rat().num(), p.v.rat().num(), coeff});
  }
  return expr;
}

ExactClass ample_above(const ConeModel& model, const QuadExt& bound, Rng& rng) {
  const ExactClass a0 = model.ample_class();
  const auto b = dynamics::eigen_coords(model, a0);
  const QuadExt low = b.a1 < b.a2 ? b.a1 : b.a2;
  const BigInt t = (bound / low).floor() + 1 + rng.uniform(0, 3);
  const Rational tr(t);
  const Rational du(rng.uniform(0, 3));
  const Rational dv(rng.uniform(0, 3));
  return {a0.u * tr + model.constant(du), a0.v * tr + model.constant(dv)};
}

}  // namespace birvol::cli
