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

#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "birvol/errors.hpp"
#include "birvol/exactnum.hpp"
#include "oracles/oracles.hpp"

namespace birvol {
namespace {

QuadExt q(long a, long b, std::int64_t d) { return QuadExt(Rational(a), Rational(b), d); }

TEST(Squarefree, SmallValues) {
  EXPECT_EQ(squarefree_part(BigInt(1)), 1);
  EXPECT_EQ(squarefree_part(BigInt(8)), 2);
  EXPECT_EQ(squarefree_part(BigInt(63)), 7);
  EXPECT_EQ(squarefree_part(BigInt(72)), 2);
  EXPECT_EQ(squarefree_part(BigInt(99)), 11);
}

TEST(Squarefree, LargePrimeSquareFactor) {
  const BigInt p = 1000003;
  EXPECT_EQ(squarefree_part(p * p * 5), 5);
  EXPECT_EQ(squarefree_part(p * 1000033), p * 1000033);
  EXPECT_FALSE(is_squarefree(p * p));
}

TEST(Squarefree, RejectsNonPositive) {
  EXPECT_THROW(squarefree_part(BigInt(0)), MathError);
}

TEST(RationalTest, ParseCanonicalizes) {
  const Rational r = Rational::parse("-6/4");
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational::parse("+7").to_string(), "7");
}

TEST(RationalTest, ParseErrors) {
  EXPECT_THROW(Rational::parse("1/0"), SchemaError);
  EXPECT_THROW(Rational::parse("6/-4"), SchemaError);
  EXPECT_THROW(Rational::parse("abc"), SchemaError);
  EXPECT_THROW(Rational::parse(""), SchemaError);
  EXPECT_THROW(Rational(1).inverse() * Rational(0).inverse(), MathError);
}

TEST(RationalTest, FloorAndPow) {
  EXPECT_EQ(Rational::parse("-7/2").floor(), -4);
  EXPECT_EQ(Rational::parse("7/2").floor(), 3);
  EXPECT_EQ(Rational::parse("2/3").pow(3), Rational::parse("8/27"));
}

TEST(QuadExtTest, UnitTimesConjugate) {
  EXPECT_EQ(q(1, 1, 2) * q(-1, 1, 2), q(1, 0, 2));
  EXPECT_EQ(q(17, 12, 2).norm(), Rational(1));
  EXPECT_EQ(q(17, 12, 2).inverse(), q(17, -12, 2));
}

TEST(QuadExtTest, SignOfNearCancellation) {
  // 577 - 408 sqrt 2 = 1 / (577 + 408 sqrt 2) > 0
  EXPECT_EQ(q(577, -408, 2).sign(), Sign::positive);
  EXPECT_EQ(q(-577, 408, 2).sign(), Sign::negative);
  EXPECT_EQ(q(0, 0, 2).sign(), Sign::zero);
}

TEST(QuadExtTest, FloorAndDouble) {
  EXPECT_EQ(q(3, 2, 2).floor(), 5);
  EXPECT_EQ(q(-3, -2, 2).floor(), -6);
  const long double ref = 1.0L / (17.0L + 12.0L * std::sqrt(2.0L));
  EXPECT_NEAR(q(17, -12, 2).to_double(), static_cast<double>(ref), 1e-17);
}

TEST(QuadExtTest, FieldChecks) {
  EXPECT_THROW(q(1, 1, 2) + q(1, 1, 3), MathError);
  EXPECT_THROW(q(1, 1, 4), MathError);
  EXPECT_THROW(q(1, 0, 2).inverse() * q(0, 0, 2).inverse(), MathError);
}

TEST(QuadExtTest, TupleRoundTrip) {
  const QuadExt x(Rational::parse("-3/4"), Rational::parse("5/6"), 7);
  EXPECT_EQ(QuadExt::from_tuple(x.to_tuple(), 7), x);
  EXPECT_EQ(x.to_string(), "-3/4+5/6*sqrt(7)");
  EXPECT_THROW(QuadExt::from_tuple({"2", "4", "0", "1"}, 7), SchemaError);
}

TEST(QuadExtTest, OverflowIsReported) {
  EXPECT_THROW(q(17, 12, 2).pow(1000).to_double(), MathError);
  EXPECT_NEAR(q(17, 12, 2).pow(1000).log_abs(), 1000 * std::log(17 + 12 * std::sqrt(2.0)), 1e-9);
}

QuadExt random_quad(oracle::Gen& g, std::int64_t d) {
  return QuadExt(Rational(BigInt(g.range(-200, 200)), BigInt(g.range(1, 30))),
                 Rational(BigInt(g.range(-200, 200)), BigInt(g.range(1, 30))), d);
}

TEST(QuadExtProperty, FieldAxiomsAndSign) {
  oracle::Gen g(0);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t d = std::array<std::int64_t, 4>{2, 3, 5, 35}[g.range(0, 3)];
    const QuadExt x = random_quad(g, d);
    const QuadExt y = random_quad(g, d);
    EXPECT_EQ(x + (-x), QuadExt::rational(0, d));
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    if (!y.is_zero()) EXPECT_EQ((x * y) / y, x);
    EXPECT_EQ(to_int((x * y).sign()), to_int(x.sign()) * to_int(y.sign()));
    const long double lx = static_cast<long double>(x.rat().to_double()) +
                           static_cast<long double>(x.irr().to_double()) * std::sqrt(static_cast<long double>(d));
    if (std::abs(lx) > 1e-6L) EXPECT_NEAR(x.to_double() / static_cast<double>(lx), 1.0, 1e-12);
    if (std::abs(x.to_double() - y.to_double()) > 1e-9) EXPECT_EQ(x < y, x.to_double() < y.to_double());
  }
}

TEST(QuadExtProperty, FloorBracketsValue) {
  oracle::Gen g(1);
  for (int i = 0; i < 200; ++i) {
    const QuadExt x = random_quad(g, 5);
    const QuadExt fl = QuadExt::rational(Rational(x.floor()), 5);
    EXPECT_LE(fl, x);
    EXPECT_LT(x, fl + QuadExt::rational(1, 5));
  }
}

}  // namespace
}  // namespace birvol
