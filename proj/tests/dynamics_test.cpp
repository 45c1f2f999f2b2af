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

#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

#include "birvol/dynamics.hpp"
#include "birvol/errors.hpp"
#include "birvol/lattice_model.hpp"
#include "oracles/oracles.hpp"

namespace birvol::dynamics {
namespace {

ExactClass cls(const ConeModel& m, long u, long v) { return exact_class(Rational(u), Rational(v), m.disc()); }

ExactClass combo(const ConeModel& m, const QuadExt& a1, const QuadExt& a2) {
  return {a1 * m.r1().u + a2 * m.r2().u, a1 * m.r1().v + a2 * m.r2().v};
}

// Positive rational eigen-coordinates, or an integer class found by rejection.
ExactClass sample(const ConeModel& m, oracle::Gen& g) {
  if (g.range(0, 1) == 0) {
    return combo(m, m.constant(Rational(BigInt(g.range(1, 400)), BigInt(g.range(1, 9)))),
                 m.constant(Rational(BigInt(g.range(1, 400)), BigInt(g.range(1, 9)))));
  }
  while (true) {
    const ExactClass d = cls(m, g.range(-80, 80), g.range(-80, 80));
    const Membership s = membership(m, d);
    if (s == Membership::nef_chamber || s == Membership::movable_interior) return d;
  }
}

TEST(Apply, MatrixProduct) {
  const ConeModel m = build_oguiso(3);
  const ExactClass d = cls(m, 1, 1);
  EXPECT_EQ(apply(m, {}, d), d);
  EXPECT_EQ(apply(m, {Letter::f}, d), cls(m, -7, 41));
  EXPECT_EQ(apply(m, {Letter::t1, Letter::t1}, d), d);
  EXPECT_EQ(apply(m, {Letter::t1, Letter::t2}, d), apply(m, {Letter::f}, d));
  EXPECT_EQ(apply(m, {Letter::f, Letter::f_inv}, d), d);
}

TEST(Words, FormatAndParse) {
  const Word w{Letter::t1, Letter::t2, Letter::f, Letter::f_inv};
  EXPECT_EQ(format_word(w), "t1t2ffi");
  EXPECT_EQ(parse_word("t1t2ffi"), w);
  EXPECT_THROW(parse_word("t3"), SchemaError);
}

TEST(LCoords, Examples) {
  const ConeModel m = build_oguiso(3);
  const ExactClass sum{m.r1().u + m.r2().u, m.r1().v + m.r2().v};
  const auto l = l_coords(m, sum);
  EXPECT_EQ(l.l1, m.constant(1));
  EXPECT_EQ(l.l2, m.constant(1));
  const auto lf = l_coords(m, m.f() * sum);
  EXPECT_EQ(lf.l1, m.constant(1));
  EXPECT_EQ(lf.l2, m.lambda() * m.lambda());
}

TEST(LCoords, MatchesFloatingSolve) {
  for (int n = 3; n <= 6; ++n) {
    const ConeModel m = build_oguiso(n);
    const auto rays = oracle::rays_long_double(-1, -2 * n, 2 * n, 4L * n * n - 1);
    for (auto [u, v] : {std::pair{1L, 1L}, std::pair{2L, 3L}, std::pair{5L, 1L}}) {
      const auto [a1, a2] = oracle::solve_eigen(rays, u, v);
      const auto l = l_coords(m, cls(m, u, v));
      EXPECT_NEAR(l.l1.to_double(), static_cast<double>(a1 * a2), 1e-12 * static_cast<double>(a1 * a2));
      EXPECT_NEAR(l.l2.to_double(), static_cast<double>(a1 / a2), 1e-12 * static_cast<double>(a1 / a2));
    }
  }
}

TEST(LCoords, BoundaryNamesCoordinate) {
  const ConeModel m = build_oguiso(3);
  try {
    l_coords(m, m.r1());
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::outside_cone);
    EXPECT_NE(std::string(e.what()).find("a2"), std::string::npos);
  }
  try {
    l_coords(m, m.r2());
    FAIL();
  } catch (const MathError& e) {
    EXPECT_NE(std::string(e.what()).find("a1"), std::string::npos);
  }
}

TEST(MembershipTest, Examples) {
  const ConeModel m = build_oguiso(3);
  EXPECT_EQ(membership(m, cls(m, 1, 1)), Membership::nef_chamber);
  EXPECT_EQ(membership(m, m.r1()), Membership::extremal_ray);
  EXPECT_EQ(membership(m, cls(m, -1, -1)), Membership::exterior);
  EXPECT_EQ(membership(m, cls(m, -7, 41)), Membership::movable_interior);
  EXPECT_EQ(membership(m, cls(m, 0, 0)), Membership::extremal_ray);
  EXPECT_EQ(membership(m, to_float(cls(m, -7, 41))), Membership::movable_interior);
}

TEST(Reduce, Examples) {
  const ConeModel m = build_oguiso(3);
  const auto nef = reduce_to_core(m, cls(m, 2, 5));
  EXPECT_TRUE(nef.word.empty());
  EXPECT_EQ(nef.chamber, 0u);

  const auto one = reduce_to_core(m, m.f() * cls(m, 1, 1));
  EXPECT_EQ(one.word.size(), 2u);
  EXPECT_EQ(one.reduced, cls(m, 1, 1));

  const ExactClass d0 = cls(m, 2, 3);
  const ExactClass d = m.f() * (m.f() * (m.f() * d0));
  const auto three = reduce_to_core(m, d);
  EXPECT_EQ(three.reduced, d0);
  EXPECT_EQ(three.power, 3);
  EXPECT_EQ(l_coords(m, three.reduced).l1, l_coords(m, d).l1);
  EXPECT_EQ(apply(m, three.word, three.reduced), d);
}

TEST(Reduce, WallRule) {
  const ConeModel m = build_oguiso(3);
  // H1 is on the wall between Nef and t1 Nef; H2 between Nef and t2 Nef.
  for (int k = -3; k <= 3; ++k) {
    ExactClass h1 = cls(m, 1, 0);
    ExactClass h2 = cls(m, 0, 1);
    const IntMat2& a = k >= 0 ? m.f() : m.action_inverse();
    for (int i = 0; i < std::abs(k); ++i) {
      h1 = a * h1;
      h2 = a * h2;
    }
    const auto r1 = reduce_to_core(m, h1);
    EXPECT_EQ(r1.chamber, 0u);
    EXPECT_EQ(r1.reduced, cls(m, 1, 0));
    EXPECT_EQ(r1.power, k);
    const auto r2 = reduce_to_core(m, h2);
    EXPECT_EQ(r2.chamber, 0u);
    EXPECT_EQ(r2.reduced, cls(m, 0, 1));
    EXPECT_EQ(r2.power, k);
  }
}

TEST(Reduce, RejectsBoundaryAndExterior) {
  const ConeModel m = build_oguiso(3);
  EXPECT_THROW(reduce_to_core(m, m.r1()), MathError);
  EXPECT_THROW(reduce_to_core(m, cls(m, -1, 0)), MathError);
}

TEST(Property, LInvariants) {
  oracle::Gen g(0);
  for (int i = 0; i < 100; ++i) {
    const ConeModel m = build_oguiso(3 + i % 4);
    const ExactClass d = sample(m, g);
    const auto l = l_coords(m, d);
    const auto lf = l_coords(m, m.f() * d);
    EXPECT_EQ(lf.l1, l.l1);
    EXPECT_EQ(lf.l2, m.lambda() * m.lambda() * l.l2);
    EXPECT_EQ(l_coords(m, m.t1() * d).l1, l.l1);
    EXPECT_EQ(l_coords(m, m.t2() * d).l1, l.l1);
  }
}

TEST(Property, ReductionReproducesInputWithinBound) {
  oracle::Gen g(1);
  for (int i = 0; i < 100; ++i) {
    const ConeModel m = build_oguiso(3 + i % 4);
    ExactClass d = sample(m, g);
    const int k = static_cast<int>(g.range(-6, 6));
    for (int j = 0; j < std::abs(k); ++j) d = (k > 0 ? m.f() : m.action_inverse()) * d;
    const auto r = reduce_to_core(m, d);
    EXPECT_EQ(apply(m, r.word, r.reduced), d);
    EXPECT_EQ(r.word.size(), 2u * static_cast<std::size_t>(std::labs(r.power)));
    EXPECT_LE(std::labs(r.power), power_bound(m, l_coords(m, d).l2.log_abs()));
    EXPECT_TRUE(reduce_to_core(m, r.reduced).word.empty());
    const auto& c = m.core_chambers()[r.chamber];
    const ExactClass nef = c.inverse * r.reduced;
    EXPECT_GE(nef.u.sign(), Sign::zero);
    EXPECT_GE(nef.v.sign(), Sign::zero);
  }
}

TEST(Property, TerminatesAcrossWideL2Range) {
  const ConeModel m = build_oguiso(3);
  for (int e = -100; e <= 100; e += 7) {
    const QuadExt big = m.lambda().pow(static_cast<unsigned>(std::abs(e)));
    const QuadExt a1 = e >= 0 ? big : big.inverse();
    const ExactClass d = combo(m, a1, a1.inverse());  // L2 = lambda^(2e)
    const auto r = reduce_to_core(m, d);
    EXPECT_LE(std::labs(r.power), power_bound(m, l_coords(m, d).l2.log_abs()));
    EXPECT_EQ(apply(m, r.word, r.reduced), d);
  }
}

TEST(Property, FloatReductionAgreesWithExact) {
  oracle::Gen g(2);
  for (int i = 0; i < 100; ++i) {
    const ConeModel m = build_oguiso(3 + i % 4);
    const ExactClass d = sample(m, g);
    const auto exact = reduce_to_core(m, d);
    const auto approx = reduce_to_core(m, to_float(d));
    EXPECT_FALSE(approx.certified);
    const ExactClass nef = m.core_chambers()[exact.chamber].inverse * exact.reduced;
    if (nef.u.sign() == Sign::zero || nef.v.sign() == Sign::zero) continue;
    EXPECT_EQ(approx.power, exact.power);
    EXPECT_EQ(approx.chamber, exact.chamber);
  }
}

TEST(Generic, SearchMatchesDihedral) {
  // Same model, declared through f and both core chambers, without generators.
  for (int n = 3; n <= 5; ++n) {
    const ConeModel dihedral = build_oguiso(n);
    ModelSpec spec = oguiso_spec(n);
    const IntMat2 t1 = *spec.t1;
    spec.f = dihedral.f();
    spec.t1.reset();
    spec.t2.reset();
    spec.extra_chambers.push_back({t1, spec.inters});
    const ConeModel generic = build_custom(spec);
    ASSERT_FALSE(generic.dihedral());
    oracle::Gen g(static_cast<std::uint64_t>(n));
    for (int i = 0; i < 60; ++i) {
      ExactClass d = sample(dihedral, g);
      const int k = static_cast<int>(g.range(-4, 4));
      for (int j = 0; j < std::abs(k); ++j) d = (k > 0 ? dihedral.f() : dihedral.action_inverse()) * d;
      const auto a = reduce_to_core(dihedral, d);
      const auto b = reduce_to_core(generic, d);
      EXPECT_EQ(a.power, b.power);
      EXPECT_EQ(a.chamber, b.chamber);
      EXPECT_EQ(a.reduced, b.reduced);
      EXPECT_EQ(apply(generic, b.word, b.reduced), d);
    }
  }
}

TEST(Generic, ModelWithoutGenerators) {
  ModelSpec s;
  s.dim = 2;
  s.inters = {0, 1, 0};
  s.f = IntMat2{2, 1, 1, 1};
  const ConeModel m = build_custom(s);
  oracle::Gen g(9);
  for (int i = 0; i < 50; ++i) {
    const ExactClass d = sample(m, g);
    const auto r = reduce_to_core(m, d);
    EXPECT_EQ(apply(m, r.word, r.reduced), d);
    const ExactClass nef = m.core_chambers()[r.chamber].inverse * r.reduced;
    EXPECT_GE(nef.u.sign(), Sign::zero);
    EXPECT_GE(nef.v.sign(), Sign::zero);
  }
}

}  // namespace
}  // namespace birvol::dynamics
