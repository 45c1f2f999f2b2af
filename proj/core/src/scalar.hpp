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

#ifndef BIRVOL_SRC_SCALAR_HPP_
#define BIRVOL_SRC_SCALAR_HPP_

#include <algorithm>
#include <cmath>

#include "birvol/dynamics.hpp"
#include "birvol/lattice_model.hpp"

namespace birvol::detail {

// Mode-specific primitives shared by the templated algorithms.
template <class S>
struct Scalar;

template <>
struct Scalar<QuadExt> {
  static constexpr bool exact = true;
  static QuadExt from(const ConeModel& m, const Rational& r) { return m.constant(r); }
  static int sign(const QuadExt& x, double /*scale*/) { return to_int(x.sign()); }
  static double scale(const DivisorClass<QuadExt>& /*d*/) { return 0.0; }
  static double approx(const QuadExt& x) { return x.to_double(); }
  static double log_abs(const QuadExt& x) { return x.log_abs(); }
  static const ExactClass& r1(const ConeModel& m) { return m.r1(); }
  static const ExactClass& r2(const ConeModel& m) { return m.r2(); }
  static const QuadExt& inv_ray_det(const ConeModel& m) { return m.inv_ray_det(); }
  static QuadExt inverse(const QuadExt& x) { return x.inverse(); }
};

template <>
struct Scalar<double> {
  static constexpr bool exact = false;
  static double from(const ConeModel& /*m*/, const Rational& r) { return r.to_double(); }
  static int sign(double x, double scale) {
    if (std::abs(x) <= dynamics::kFloatSignTolerance * scale) return 0;
    return x > 0 ? 1 : -1;
  }
  static double scale(const DivisorClass<double>& d) { return std::max(std::abs(d.u), std::abs(d.v)); }
  static double approx(double x) { return x; }
  static double log_abs(double x) { return std::log(std::abs(x)); }
  static const FloatClass& r1(const ConeModel& m) { return m.r1_f(); }
  static const FloatClass& r2(const ConeModel& m) { return m.r2_f(); }
  static double inv_ray_det(const ConeModel& m) { return m.inv_ray_det_f(); }
  static double inverse(double x) { return 1.0 / x; }
};

}  // namespace birvol::detail

#endif  // BIRVOL_SRC_SCALAR_HPP_
