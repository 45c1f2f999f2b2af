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

#ifndef BIRVOL_LATTICE_MODEL_HPP_
#define BIRVOL_LATTICE_MODEL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "birvol/exactnum.hpp"

namespace birvol {

// Coordinates (u, v) of a numerical class u*H1 + v*H2 in the reference basis.
// The scalar type is the mode: QuadExt for exact classes, double for
// floating ones.
template <class S>
struct DivisorClass {
  S u;
  S v;

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.u == b.u && a.v == b.v; }
};

using ExactClass = DivisorClass<QuadExt>;
using FloatClass = DivisorClass<double>;

FloatClass to_float(const ExactClass& d);
ExactClass exact_class(const Rational& u, const Rational& v, std::int64_t disc);

// Integer 2x2 matrix [[a, b], [c, d]] acting on column vectors (u, v).
struct IntMat2 {
  BigInt a = 1, b = 0, c = 0, d = 1;

  static IntMat2 identity() { return {}; }
  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  // Requires det = +-1.
  IntMat2 inverse() const;
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

  friend IntMat2 operator*(const IntMat2& x, const IntMat2& y);
  friend bool operator==(const IntMat2& x, const IntMat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

ExactClass operator*(const IntMat2& m, const ExactClass& x);
FloatClass operator*(const IntMat2& m, const FloatClass& x);

// A nef chamber of some minimal model, seen in the reference coordinates:
// the cone transition * (first quadrant), with intersection numbers
// inters[j] = H1'^j H2'^(n-j) of the model's own nef basis.
struct Chamber {
  IntMat2 transition;
  std::vector<BigInt> inters;
};

struct EigenRays {
  QuadExt lambda;  // > 1
  ExactClass r1;   // action * r1 = lambda * r1
  ExactClass r2;   // action * r2 = lambda^-1 * r2
  bool squared = false;  // eigen-data belongs to m^2 rather than m
  std::int64_t disc = 0;
};

// Eigen-data of a hyperbolic unimodular integer matrix. When the eigenvalues
// are not both positive the matrix does not fix the two rays, and the data of
// its square is returned with `squared` set. Each ray is scaled so that its
// two coordinates sum to exactly 1.
EigenRays eigen_rays(const IntMat2& m);

// Input for build_custom: the "model description" document, decoded.
struct ModelSpec {
  std::string id = "custom";
  int dim = 0;
  std::vector<BigInt> inters;             // reference chamber (transition = identity)
  std::vector<Chamber> extra_chambers;    // further declared nef chambers
  std::optional<IntMat2> t1;
  std::optional<IntMat2> t2;
  std::optional<IntMat2> f;               // defaults to t2 * t1
  std::array<BigInt, 2> ample{1, 1};
  bool square_action = false;

  // Optional redundant data; checked against the recomputed values.
  std::optional<std::int64_t> disc;
  std::optional<std::array<std::string, 4>> lambda;
  std::optional<std::array<std::array<std::string, 4>, 2>> r1;
  std::optional<std::array<std::array<std::string, 4>, 2>> r2;
};

// Chamber of the core region used for reduction. Declared chambers come first
// (index 0 is the reference nef cone); with generators present each declared
// chamber is followed in the list by its t1-image.
struct CoreChamber {
  IntMat2 transition;
  IntMat2 inverse;
  std::vector<BigInt> inters;
};

class ConeModel {
 public:
  const std::string& id() const { return id_; }
  int dim() const { return dim_; }
  std::int64_t disc() const { return disc_; }
  const std::vector<BigInt>& inters() const { return declared_.front().inters; }
  const std::vector<Chamber>& declared_chambers() const { return declared_; }
  const std::vector<CoreChamber>& core_chambers() const { return core_; }

  bool has_generators() const { return t1_.has_value(); }
  const IntMat2& t1() const;
  const IntMat2& t2() const;
  // f as supplied (f = t2 * t1 when built from generators).
  const IntMat2& f() const { return f_; }
  // The matrix whose eigen-rays are R1, R2: f, or f^2 under square_action.
  const IntMat2& action() const { return action_; }
  const IntMat2& action_inverse() const { return action_inv_; }
  bool square_action() const { return square_action_; }

  const QuadExt& lambda() const { return lambda_; }
  const ExactClass& r1() const { return r1_; }
  const ExactClass& r2() const { return r2_; }
  const std::array<BigInt, 2>& ample() const { return ample_; }
  ExactClass ample_class() const;

  // Precomputed floating data.
  double lambda_f() const { return lambda_f_; }
  double log_lambda() const { return log_lambda_; }
  const FloatClass& r1_f() const { return r1_f_; }
  const FloatClass& r2_f() const { return r2_f_; }

  // 1 / det[R1 R2], for eigen-coordinate solves.
  const QuadExt& inv_ray_det() const { return inv_ray_det_; }
  double inv_ray_det_f() const { return inv_ray_det_f_; }

  // Wall-reflection generators (t1 fixes H1 and reflects across it, t2 fixes
  // H2) with the reference nef cone inside Mov: reduction can use the
  // reflection sign test instead of searching over powers of f.
  bool dihedral() const { return dihedral_; }

  // log L2 range covered by the core chambers (may be infinite).
  double core_log_l2_lo() const { return core_log_l2_lo_; }
  double core_log_l2_hi() const { return core_log_l2_hi_; }

  QuadExt constant(const Rational& r) const { return QuadExt::rational(r, disc_); }

  friend ConeModel build_custom(const ModelSpec& spec);

 private:
  ConeModel() = default;

  std::string id_;
  int dim_ = 0;
  std::int64_t disc_ = 0;
  std::vector<Chamber> declared_;
  std::vector<CoreChamber> core_;
  std::optional<IntMat2> t1_;
  std::optional<IntMat2> t2_;
  IntMat2 f_;
  IntMat2 action_;
  IntMat2 action_inv_;
  bool square_action_ = false;
  QuadExt lambda_;
  ExactClass r1_;
  ExactClass r2_;
  std::array<BigInt, 2> ample_{1, 1};
  double lambda_f_ = 0;
  double log_lambda_ = 0;
  FloatClass r1_f_{};
  FloatClass r2_f_{};
  QuadExt inv_ray_det_;
  double inv_ray_det_f_ = 0;
  bool dihedral_ = false;
  double core_log_l2_lo_ = 0;
  double core_log_l2_hi_ = 0;
};

// The Oguiso family: a general complete intersection of N-1 hypersurfaces of
// bidegree (1,1) and one of bidegree (2,2) in P^N x P^N, with the covering
// involutions of its two degree-2 projections.
//
//   inters[j] = 2 * binomial(N, j)
//   t1 = [[1, 2N], [0, -1]]   (t1^* H1 = H1, t1^* H2 = 2N H1 - H2)
//   t2 = [[-1, 0], [2N, 1]]
//   f  = t2 * t1              (f = tau1 o tau2 acts by tau2^* o tau1^*)
ConeModel build_oguiso(int n);
ModelSpec oguiso_spec(int n);

ConeModel build_custom(const ModelSpec& spec);

// H1^j H2^(N-j) on the Oguiso variety.
std::vector<BigInt> oguiso_intersections_closed_form(int n);
// Same numbers read off the truncated Chow ring of P^N x P^N: the
// coefficient of x^N y^N in 2 (x + y)^N x^j y^(N-j).
std::vector<BigInt> oguiso_intersections_by_expansion(int n);

BigInt binomial(unsigned n, unsigned k);

// Model documents. Integers are decimal strings; exact numbers are
// quad-tuples {"a_num","a_den","b_num","b_den"}.
nlohmann::json to_json(const ConeModel& model);
ModelSpec spec_from_json(const nlohmann::json& doc);
ConeModel model_from_json(const nlohmann::json& doc);

nlohmann::json quad_to_json(const QuadExt& x);
QuadExt quad_from_json(const nlohmann::json& j, std::int64_t disc, const std::string& path);
nlohmann::json class_to_json(const ExactClass& c);

}  // namespace birvol

#endif  // BIRVOL_LATTICE_MODEL_HPP_
