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

#include "birvol/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <tuple>

#include "birvol/errors.hpp"
#include "scalar.hpp"

namespace birvol::dynamics {

namespace {

using detail::Scalar;

// Letters spelling action^k.
Word power_word(const ConeModel& model, long k) {
  Word w;
  const long reps = std::abs(k) * (model.square_action() ? 2 : 1);
  for (long i = 0; i < reps; ++i) {
    if (model.has_generators()) {
      if (k > 0) {
        w.push_back(Letter::t1);
        w.push_back(Letter::t2);
      } else {
        w.push_back(Letter::t2);
        w.push_back(Letter::t1);
      }
    } else {
      w.push_back(k > 0 ? Letter::f : Letter::f_inv);
    }
  }
  return w;
}

template <class S>
bool in_chamber(const CoreChamber& c, const DivisorClass<S>& d) {
  const DivisorClass<S> nef = c.inverse * d;
  const double scale = Scalar<S>::scale(nef);
  return Scalar<S>::sign(nef.u, scale) >= 0 && Scalar<S>::sign(nef.v, scale) >= 0;
}

template <class S>
ReductionResult<S> reduce_dihedral(const ConeModel& model, const DivisorClass<S>& d) {
  const IntMat2& t1 = model.t1();
  const IntMat2& t2 = model.t2();
  DivisorClass<S> x = d;
  std::size_t steps = 0;
  std::optional<Letter> first;
  constexpr std::size_t kMaxSteps = 1'000'000;
  while (true) {
    const double scale = Scalar<S>::scale(x);
    const int su = Scalar<S>::sign(x.u, scale);
    const int sv = Scalar<S>::sign(x.v, scale);
    if (su >= 0 && sv >= 0) break;
    const Letter l = sv < 0 ? Letter::t1 : Letter::t2;
    if (!first) first = l;
    x = (l == Letter::t1 ? t1 : t2) * x;
    if (++steps > kMaxSteps) throw MathError(ErrorCode::uncovered_class, "reflection reduction did not terminate");
  }
  // d = s_1 s_2 ... s_L x with alternating letters; rewrite the product as
  // f^k or f^k t1 using t2 = f t1.
  long k = 0;
  bool odd = steps % 2 == 1;
  const long half = static_cast<long>(steps / 2);
  if (steps > 0 && *first == Letter::t2) {
    k = odd ? half + 1 : half;
  } else {
    k = -half;
  }
  ReductionResult<S> out;
  out.certified = Scalar<S>::exact;
  out.reduced = x;
  out.chamber = 0;
  if (odd) {
    const double scale = Scalar<S>::scale(x);
    if (Scalar<S>::sign(x.v, scale) == 0) {
      // x on the H1 wall is fixed by t1.
    } else if (Scalar<S>::sign(x.u, scale) == 0) {
      // x on the H2 wall is fixed by t2: f^k t1 x = f^k t1 t2 x = f^(k-1) x.
      k -= 1;
    } else {
      out.reduced = t1 * x;
      out.chamber = 1;
    }
  }
  out.power = k;
  out.word = power_word(model, k);
  return out;
}

template <class S>
DivisorClass<S> act_power(const ConeModel& model, DivisorClass<S> x, long k) {
  const IntMat2& m = k >= 0 ? model.action() : model.action_inverse();
  for (long i = 0; i < std::abs(k); ++i) x = m * x;
  return x;
}

template <class S>
ReductionResult<S> reduce_search(const ConeModel& model, const DivisorClass<S>& d, double log_l2) {
  const double period = 2.0 * model.log_lambda();
  const double lo = model.core_log_l2_lo();
  const double hi = model.core_log_l2_hi();
  long k0 = 0;
  if (std::isfinite(lo)) {
    k0 = static_cast<long>(std::floor((log_l2 - lo) / period));
  } else if (std::isfinite(hi)) {
    k0 = static_cast<long>(std::ceil((log_l2 - hi) / period));
  }
  for (long radius : {2L, 8L}) {
    std::optional<std::tuple<std::size_t, long, long>> best;  // chamber, |k|, k
    DivisorClass<S> best_class{};
    DivisorClass<S> y = act_power(model, d, -(k0 - radius));
    for (long k = k0 - radius; k <= k0 + radius; ++k) {
      for (std::size_t c = 0; c < model.core_chambers().size(); ++c) {
        if (!in_chamber(model.core_chambers()[c], y)) continue;
        const auto key = std::make_tuple(c, std::abs(k), k);
        if (!best || key < *best) {
          best = key;
          best_class = y;
        }
        break;
      }
      y = model.action_inverse() * y;
    }
    if (best) {
      ReductionResult<S> out;
      out.chamber = std::get<0>(*best);
      out.power = std::get<2>(*best);
      out.reduced = best_class;
      out.word = power_word(model, out.power);
      out.certified = Scalar<S>::exact;
      return out;
    }
  }
  throw MathError(ErrorCode::uncovered_class, "class is not covered by the translates of the declared core chambers");
}

}  // namespace

std::string format_word(const Word& word) {
  std::string out;
  for (Letter l : word) {
    switch (l) {
      case Letter::t1: out += "t1"; break;
      case Letter::t2: out += "t2"; break;
      case Letter::f: out += "f"; break;
      case Letter::f_inv: out += "fi"; break;
    }
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.substr(i, 2) == "t1") {
      out.push_back(Letter::t1);
      i += 2;
    } else if (text.substr(i, 2) == "t2") {
      out.push_back(Letter::t2);
      i += 2;
    } else if (text.substr(i, 2) == "fi") {
      out.push_back(Letter::f_inv);
      i += 2;
    } else if (text[i] == 'f') {
      out.push_back(Letter::f);
      i += 1;
    } else if (text[i] == ' ' || text[i] == ',') {
      i += 1;
    } else {
      throw SchemaError("", "bad word '" + std::string(text) + "': expected tokens t1, t2, f, fi");
    }
  }
  return out;
}

IntMat2 letter_matrix(const ConeModel& model, Letter letter) {
  switch (letter) {
    case Letter::t1: return model.t1();
    case Letter::t2: return model.t2();
    case Letter::f: return model.f();
    case Letter::f_inv: return model.f().inverse();
  }
  return IntMat2::identity();
}

IntMat2 word_matrix(const ConeModel& model, const Word& word) {
  IntMat2 m = IntMat2::identity();
  for (Letter l : word) m = letter_matrix(model, l) * m;
  return m;
}

template <class S>
DivisorClass<S> apply(const ConeModel& model, const Word& word, const DivisorClass<S>& d) {
  DivisorClass<S> x = d;
  for (Letter l : word) x = letter_matrix(model, l) * x;
  return x;
}

template <class S>
EigenCoords<S> eigen_coords(const ConeModel& model, const DivisorClass<S>& d) {
  const auto& r1 = Scalar<S>::r1(model);
  const auto& r2 = Scalar<S>::r2(model);
  const auto& inv = Scalar<S>::inv_ray_det(model);
  return {(d.u * r2.v - r2.u * d.v) * inv, (r1.u * d.v - d.u * r1.v) * inv};
}

template <class S>
LCoords<S> l_coords(const ConeModel& model, const DivisorClass<S>& d) {
  const auto e = eigen_coords(model, d);
  const double scale = std::max(std::abs(Scalar<S>::approx(e.a1)), std::abs(Scalar<S>::approx(e.a2)));
  if (Scalar<S>::sign(e.a1, scale) <= 0) {
    throw MathError(ErrorCode::outside_cone, "class is not in the open movable cone: eigen-coordinate a1 (along R1) is non-positive");
  }
  if (Scalar<S>::sign(e.a2, scale) <= 0) {
    throw MathError(ErrorCode::outside_cone, "class is not in the open movable cone: eigen-coordinate a2 (along R2) is non-positive");
  }
  return {e.a1 * e.a2, e.a1 * Scalar<S>::inverse(e.a2)};
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::nef_chamber: return "nef_chamber";
    case Membership::movable_interior: return "movable_interior";
    case Membership::extremal_ray: return "extremal_ray";
    case Membership::exterior: return "exterior";
  }
  return "?";
}

template <class S>
Membership membership(const ConeModel& model, const DivisorClass<S>& d) {
  const auto e = eigen_coords(model, d);
  double scale = 0;
  if constexpr (!Scalar<S>::exact) scale = std::max(std::abs(e.a1), std::abs(e.a2));
  const int s1 = Scalar<S>::sign(e.a1, scale);
  const int s2 = Scalar<S>::sign(e.a2, scale);
  if (s1 < 0 || s2 < 0) return Membership::exterior;
  if (s1 == 0 || s2 == 0) return Membership::extremal_ray;
  const double nef_scale = Scalar<S>::scale(d);
  if (Scalar<S>::sign(d.u, nef_scale) >= 0 && Scalar<S>::sign(d.v, nef_scale) >= 0) return Membership::nef_chamber;
  return Membership::movable_interior;
}

template <class S>
ReductionResult<S> reduce_to_core(const ConeModel& model, const DivisorClass<S>& d) {
  const Membership m = membership(model, d);
  if (m == Membership::exterior || m == Membership::extremal_ray) {
    throw MathError(ErrorCode::outside_cone, std::string("reduce_to_core needs a class in the open movable cone, got ") +
                                                 std::string(to_string(m)));
  }
  if (model.dihedral()) return reduce_dihedral(model, d);
  const auto e = eigen_coords(model, d);
  const double log_l2 = Scalar<S>::log_abs(e.a1) - Scalar<S>::log_abs(e.a2);
  return reduce_search(model, d, log_l2);
}

long power_bound(const ConeModel& model, double log_l2) {
  return 2 + static_cast<long>(std::ceil(std::abs(log_l2) / (2.0 * model.log_lambda()))) + 2;
}

template ExactClass apply(const ConeModel&, const Word&, const ExactClass&);
template FloatClass apply(const ConeModel&, const Word&, const FloatClass&);
template EigenCoords<QuadExt> eigen_coords(const ConeModel&, const ExactClass&);
template EigenCoords<double> eigen_coords(const ConeModel&, const FloatClass&);
template LCoords<QuadExt> l_coords(const ConeModel&, const ExactClass&);
template LCoords<double> l_coords(const ConeModel&, const FloatClass&);
template Membership membership(const ConeModel&, const ExactClass&);
template Membership membership(const ConeModel&, const FloatClass&);
template ReductionResult<QuadExt> reduce_to_core(const ConeModel&, const ExactClass&);
template ReductionResult<double> reduce_to_core(const ConeModel&, const FloatClass&);

}  // namespace birvol::dynamics
