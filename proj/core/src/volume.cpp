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

#include "birvol/volume.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "birvol/errors.hpp"
#include "scalar.hpp"

namespace birvol::volume {

namespace {

using detail::Scalar;

template <class S>
S intersection_polynomial(const ConeModel& model, const std::vector<BigInt>& inters, const S& u, const S& v) {
  const int n = model.dim();
  std::vector<S> up(n + 1, Scalar<S>::from(model, 1));
  std::vector<S> vp(n + 1, Scalar<S>::from(model, 1));
  for (int j = 1; j <= n; ++j) {
    up[j] = up[j - 1] * u;
    vp[j] = vp[j - 1] * v;
  }
  S acc = Scalar<S>::from(model, 0);
  for (int j = 0; j <= n; ++j) {
    if (inters[j] == 0) continue;
    acc += up[j] * vp[n - j] * Scalar<S>::from(model, Rational(binomial(n, j) * inters[j]));
  }
  return acc;
}

// Float coordinates within the sign tolerance of a wall are snapped onto it.
template <class S>
void snap(S& x, double scale) {
  if constexpr (!Scalar<S>::exact) {
    if (Scalar<S>::sign(x, scale) == 0) x = 0;
  }
}

QuadExt abs_eigen_sum(const ConeModel& model, const DivisorExpression& expr) {
  QuadExt c = model.constant(0);
  for (const Component& p : expr.components) {
    const auto e = dynamics::eigen_coords(model, exact_class(Rational(p.u), Rational(p.v), model.disc()));
    c += e.a1.abs() + e.a2.abs();
  }
  return c;
}

}  // namespace

template <class S>
S vol_nef(const ConeModel& model, const DivisorClass<S>& d) {
  DivisorClass<S> x = d;
  const double scale = Scalar<S>::scale(x);
  snap(x.u, scale);
  snap(x.v, scale);
  if (Scalar<S>::sign(x.u, scale) < 0 || Scalar<S>::sign(x.v, scale) < 0) {
    throw MathError(ErrorCode::negative_nef_coordinate,
                    "vol_nef needs nonnegative nef coordinates; use vol_movable for classes outside the nef cone");
  }
  return intersection_polynomial(model, model.inters(), x.u, x.v);
}

template <class S>
S vol_in_chamber(const ConeModel& model, std::size_t chamber, const DivisorClass<S>& d) {
  if (chamber >= model.core_chambers().size()) {
    throw MathError(ErrorCode::bad_chamber, "chamber index " + std::to_string(chamber) + " out of range");
  }
  const CoreChamber& c = model.core_chambers()[chamber];
  DivisorClass<S> x = c.inverse * d;
  const double scale = Scalar<S>::scale(x);
  snap(x.u, scale);
  snap(x.v, scale);
  if (Scalar<S>::sign(x.u, scale) < 0 || Scalar<S>::sign(x.v, scale) < 0) {
    throw MathError(ErrorCode::negative_nef_coordinate,
                    "class is not in core chamber " + std::to_string(chamber) + "; use vol_movable");
  }
  return intersection_polynomial(model, c.inters, x.u, x.v);
}

template <class S>
MovableVolume<S> vol_movable_detail(const ConeModel& model, const DivisorClass<S>& d) {
  MovableVolume<S> out;
  out.membership = dynamics::membership(model, d);
  switch (out.membership) {
    case dynamics::Membership::exterior:
      throw MathError(ErrorCode::outside_cone, "class lies outside the closed movable cone");
    case dynamics::Membership::extremal_ray:
      out.vol = Scalar<S>::from(model, 0);
      out.reduction.reduced = d;
      out.reduction.certified = Scalar<S>::exact;
      return out;
    default:
      break;
  }
  out.reduction = dynamics::reduce_to_core(model, d);
  out.vol = vol_in_chamber(model, out.reduction.chamber, out.reduction.reduced);
  return out;
}

Envelope sandwich_envelope(const ConeModel& model, std::size_t points) {
  if (points < 2) throw MathError(ErrorCode::degenerate_series, "sandwich grid needs at least 2 points");
  Envelope env;
  env.points = points;
  env.c11 = std::numeric_limits<double>::infinity();
  env.c21 = 0;
  const FloatClass& r1 = model.r1_f();
  const FloatClass& r2 = model.r2_f();
  const double span = 2.0 * model.log_lambda();
  for (std::size_t i = 0; i < points; ++i) {
    const double log_l2 = span * static_cast<double>(i) / static_cast<double>(points - 1);
    const double a1 = std::exp(0.5 * log_l2);
    const double a2 = std::exp(-0.5 * log_l2);
    const FloatClass d{a1 * r1.u + a2 * r2.u, a1 * r1.v + a2 * r2.v};
    const double vol = vol_movable(model, d);  // L1 = 1
    const double l2 = std::exp(log_l2);
    if (vol < env.c11) {
      env.c11 = vol;
      env.l2_at_min = l2;
    }
    if (vol > env.c21) {
      env.c21 = vol;
      env.l2_at_max = l2;
    }
  }
  return env;
}

ExactClass expression_class(const ConeModel& model, const DivisorExpression& expr) {
  ExactClass d{model.constant(0), model.constant(0)};
  for (const Component& p : expr.components) {
    d.u += p.coeff * Rational(p.u);
    d.v += p.coeff * Rational(p.v);
  }
  return d;
}

FloorResult floor_class(const ConeModel& model, const DivisorExpression& expr) {
  FloorResult out{{model.constant(0), model.constant(0)}, {model.constant(0), model.constant(0)}};
  for (const Component& p : expr.components) {
    if (p.coeff.sign() == Sign::negative) {
      throw MathError(ErrorCode::hypothesis_violation, "divisor expression coefficients must be nonnegative");
    }
    const Rational fl(p.coeff.floor());
    const QuadExt frac = p.coeff - model.constant(fl);
    out.floor.u += model.constant(fl * Rational(p.u));
    out.floor.v += model.constant(fl * Rational(p.v));
    out.perturbation.u += frac * Rational(p.u);
    out.perturbation.v += frac * Rational(p.v);
  }
  return out;
}

FloorConstants floor_constants(const ConeModel& model, const DivisorExpression& expr) {
  FloorConstants k;
  k.c = abs_eigen_sum(model, expr);
  k.c2 = model.constant(1) + k.c;
  k.c22 = k.c2 * k.c2;
  k.c12 = k.c22.inverse();
  return k;
}

Lemma44Report lemma44_check(const ConeModel& model, const DivisorExpression& expr, const ExactClass& a) {
  Lemma44Report r;
  r.constants = floor_constants(model, expr);
  const auto b = dynamics::eigen_coords(model, a);
  if (!(b.a1 > r.constants.c2)) {
    throw MathError(ErrorCode::hypothesis_violation, "ample class violates b1 > C2: b1 = " + b.a1.to_string() +
                                                         ", C2 = " + r.constants.c2.to_string());
  }
  if (!(b.a2 > r.constants.c2)) {
    throw MathError(ErrorCode::hypothesis_violation, "ample class violates b2 > C2: b2 = " + b.a2.to_string() +
                                                         ", C2 = " + r.constants.c2.to_string());
  }
  r.d = expression_class(model, expr);
  if (dynamics::membership(model, r.d) == dynamics::Membership::exterior) {
    throw MathError(ErrorCode::outside_cone, "divisor expression lies outside the closed movable cone");
  }
  r.floor = floor_class(model, expr).floor;
  const ExactClass d_plus_a{r.d.u + a.u, r.d.v + a.v};
  const ExactClass floor_plus_a{r.floor.u + a.u, r.floor.v + a.v};
  r.l1_d_plus_a = dynamics::l_coords(model, d_plus_a).l1;
  const auto m = dynamics::membership(model, floor_plus_a);
  r.floor_plus_a_movable = m == dynamics::Membership::nef_chamber || m == dynamics::Membership::movable_interior;
  const auto e = dynamics::eigen_coords(model, floor_plus_a);
  r.l1_floor_plus_a = e.a1 * e.a2;
  r.lower = r.constants.c12 * r.l1_d_plus_a;
  r.upper = r.constants.c22 * r.l1_d_plus_a;
  r.pass = r.floor_plus_a_movable && r.lower < r.l1_floor_plus_a && r.l1_floor_plus_a < r.upper;
  return r;
}

CsvRow csv_row(const ConeModel& model, const ExactClass& d) {
  const auto mv = vol_movable_detail(model, d);
  const auto e = dynamics::eigen_coords(model, d);
  CsvRow row;
  row.model_id = model.id();
  row.u = d.u.to_double();
  row.v = d.v.to_double();
  row.l1 = (e.a1 * e.a2).to_double();
  row.l2 = e.a2.is_zero() ? std::numeric_limits<double>::infinity() : (e.a1 / e.a2).to_double();
  row.vol = mv.vol.to_double();
  row.word_length = mv.reduction.word.size();
  return row;
}

template QuadExt vol_nef(const ConeModel&, const ExactClass&);
template double vol_nef(const ConeModel&, const FloatClass&);
template QuadExt vol_in_chamber(const ConeModel&, std::size_t, const ExactClass&);
template double vol_in_chamber(const ConeModel&, std::size_t, const FloatClass&);
template MovableVolume<QuadExt> vol_movable_detail(const ConeModel&, const ExactClass&);
template MovableVolume<double> vol_movable_detail(const ConeModel&, const FloatClass&);

}  // namespace birvol::volume
