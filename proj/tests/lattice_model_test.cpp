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

#include <functional>

#include <gtest/gtest.h>

#include "birvol/errors.hpp"
#include "birvol/lattice_model.hpp"
#include "oracles/oracles.hpp"

namespace birvol {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::parse_error;
}

TEST(Oguiso, ThreeFoldGenerators) {
  const ConeModel m = build_oguiso(3);
  EXPECT_EQ(m.t1(), (IntMat2{1, 6, 0, -1}));
  EXPECT_EQ(m.t2(), (IntMat2{-1, 0, 6, 1}));
  EXPECT_EQ(m.f(), (IntMat2{-1, -6, 6, 35}));
  EXPECT_EQ(m.disc(), 2);
  EXPECT_EQ(m.lambda(), QuadExt(17, 12, 2));
  EXPECT_TRUE(m.dihedral());
  EXPECT_EQ(m.core_chambers().size(), 2u);
}

TEST(Oguiso, IntersectionsMatchEnumeration) {
  for (int n = 3; n <= 12; ++n) {
    const auto closed = oguiso_intersections_closed_form(n);
    const auto oracle = oracle::intersections_by_enumeration(n);
    ASSERT_EQ(closed.size(), oracle.size());
    for (std::size_t j = 0; j < closed.size(); ++j) EXPECT_EQ(closed[j], oracle[j]) << "N=" << n << " j=" << j;
    EXPECT_EQ(closed, oguiso_intersections_by_expansion(n));
  }
}

TEST(Oguiso, EigenRaysAreEigenvectors) {
  for (int n = 3; n <= 10; ++n) {
    const ConeModel m = build_oguiso(n);
    const ExactClass fr1 = m.f() * m.r1();
    const ExactClass fr2 = m.f() * m.r2();
    EXPECT_EQ(fr1.u, m.lambda() * m.r1().u);
    EXPECT_EQ(fr1.v, m.lambda() * m.r1().v);
    EXPECT_EQ(fr2.u * m.lambda(), m.r2().u);
    EXPECT_EQ(fr2.v * m.lambda(), m.r2().v);
    EXPECT_EQ(m.r1().u + m.r1().v, m.constant(1));
    EXPECT_EQ(m.r2().u + m.r2().v, m.constant(1));
    // The two rays are swapped by the involutions and add up to H1 + H2.
    EXPECT_EQ(m.r1().u + m.r2().u, m.constant(1));
    const auto ld = oracle::rays_long_double(-1, -2 * n, 2 * n, 4L * n * n - 1);
    EXPECT_NEAR(m.lambda().to_double(), static_cast<double>(ld.lambda), 1e-12 * static_cast<double>(ld.lambda));
    EXPECT_NEAR(m.r1().u.to_double(), static_cast<double>(ld.r1u), 1e-12);
  }
}

TEST(Oguiso, RejectsSmallN) {
  EXPECT_EQ(code_of([] { build_oguiso(2); }), ErrorCode::bad_dimension);
}

TEST(EigenRays, ParabolicAndEllipticRejected) {
  try {
    eigen_rays(IntMat2{1, 1, 0, 1});
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_hyperbolic);
    EXPECT_NE(std::string(e.what()).find("spectral radius 1"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { eigen_rays(IntMat2{0, -1, 1, 0}); }), ErrorCode::not_hyperbolic);
  EXPECT_EQ(code_of([] { eigen_rays(IntMat2{2, 0, 0, 1}); }), ErrorCode::bad_determinant);
}

TEST(EigenRays, NegativeTraceIsSquared) {
  const EigenRays e = eigen_rays(IntMat2{-2, -1, -1, -1});
  EXPECT_TRUE(e.squared);
  EXPECT_EQ(e.disc, 5);
}

ModelSpec golden_spec() {
  ModelSpec s;
  s.id = "golden";
  s.dim = 2;
  s.inters = {0, 1, 0};
  s.f = IntMat2{2, 1, 1, 1};
  return s;
}

TEST(Custom, ModelWithoutGenerators) {
  const ConeModel m = build_custom(golden_spec());
  EXPECT_FALSE(m.has_generators());
  EXPECT_FALSE(m.dihedral());
  EXPECT_EQ(m.disc(), 5);
  EXPECT_EQ(m.lambda(), QuadExt(Rational(3, 2), Rational(1, 2), 5));
  EXPECT_EQ(m.core_chambers().size(), 1u);
}

TEST(Custom, Validation) {
  ModelSpec s = golden_spec();
  s.f = IntMat2{-2, -1, -1, -1};
  EXPECT_EQ(code_of([&] { build_custom(s); }), ErrorCode::rays_not_fixed);
  s.square_action = true;
  EXPECT_NO_THROW(build_custom(s));

  s = golden_spec();
  s.inters = {0, 1};
  EXPECT_EQ(code_of([&] { build_custom(s); }), ErrorCode::bad_chamber);
  s = golden_spec();
  s.inters = {0, 0, 0};
  EXPECT_EQ(code_of([&] { build_custom(s); }), ErrorCode::bad_chamber);
  s = golden_spec();
  s.f.reset();
  EXPECT_EQ(code_of([&] { build_custom(s); }), ErrorCode::missing_generators);
  s = golden_spec();
  s.disc = 3;
  EXPECT_EQ(code_of([&] { build_custom(s); }), ErrorCode::inconsistent_model);
  s = golden_spec();
  s.ample = {BigInt(0), BigInt(1)};
  EXPECT_EQ(code_of([&] { build_custom(s); }), ErrorCode::bad_ample);

  ModelSpec o = oguiso_spec(3);
  o.t1 = IntMat2{1, 6, 0, 1};
  EXPECT_EQ(code_of([&] { build_custom(o); }), ErrorCode::not_involution);
  o = oguiso_spec(3);
  o.lambda = {"17", "1", "-12", "1"};
  EXPECT_EQ(code_of([&] { build_custom(o); }), ErrorCode::inconsistent_model);
}

TEST(Json, RoundTripIsStable) {
  for (int n = 3; n <= 6; ++n) {
    const ConeModel m = build_oguiso(n);
    const nlohmann::json doc = to_json(m);
    const ConeModel back = model_from_json(doc);
    EXPECT_EQ(to_json(back), doc);
    EXPECT_EQ(back.lambda(), m.lambda());
    EXPECT_EQ(back.dihedral(), m.dihedral());
  }
  const ConeModel g = build_custom(golden_spec());
  EXPECT_EQ(to_json(model_from_json(to_json(g))), to_json(g));
}

TEST(Json, SchemaPaths) {
  nlohmann::json doc = to_json(build_oguiso(3));
  doc["T1"][0] = "x";
  try {
    model_from_json(doc);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "$.T1[0]");
  }
  doc = to_json(build_oguiso(3));
  doc.erase("dim");
  try {
    model_from_json(doc);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "$.dim");
  }
  doc = to_json(build_oguiso(3));
  doc["inters"][2] = "abc";
  try {
    model_from_json(doc);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "$.inters[2]");
  }
}

TEST(IntMat, InverseAndProduct) {
  const IntMat2 f{-1, -6, 6, 35};
  EXPECT_TRUE((f * f.inverse()).is_identity());
  EXPECT_EQ(f.trace(), 34);
  EXPECT_THROW(IntMat2({2, 0, 0, 1}).inverse(), MathError);
}

}  // namespace
}  // namespace birvol
