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

#include "birvol/lattice_model.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "birvol/errors.hpp"

namespace birvol {

namespace {

using nlohmann::json;

Rational to_rational(const BigInt& v) { return Rational(v); }

std::string path_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

BigInt json_bigint(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()), 10);
  } catch (const SchemaError& e) {
    throw SchemaError(path, e.detail());
  }
  throw SchemaError(path, "expected an integer (decimal string)");
}

const json& require(const json& doc, const char* key, const std::string& path) {
  if (!doc.is_object()) throw SchemaError(path, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

std::vector<BigInt> json_int_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of integers");
  std::vector<BigInt> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(json_bigint(j[i], path_index(path, i)));
  return out;
}

IntMat2 json_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(path, "expected a 2x2 matrix [[a,b],[c,d]]");
  auto row = [&](std::size_t r) {
    const std::string p = path_index(path, r);
    const auto v = json_int_list(j[r], p);
    if (v.size() != 2) throw SchemaError(p, "expected a row of 2 integers");
    return v;
  };
  const auto r0 = row(0);
  const auto r1 = row(1);
  return {r0[0], r0[1], r1[0], r1[1]};
}

json matrix_to_json(const IntMat2& m) {
  return json::array({json::array({to_string(m.a), to_string(m.b)}), json::array({to_string(m.c), to_string(m.d)})});
}

json int_list_to_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::array<std::string, 4> json_tuple(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4) throw SchemaError(path, "expected a quad-tuple of 4 decimal strings");
  std::array<std::string, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = to_string(json_bigint(j[i], path_index(path, i)));
  return out;
}

std::array<std::array<std::string, 4>, 2> json_ray(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(path, "expected [u-tuple, v-tuple]");
  return {json_tuple(j[0], path_index(path, 0)), json_tuple(j[1], path_index(path, 1))};
}

// Eigen-coordinates (a1, a2) of x = a1 R1 + a2 R2 by Cramer's rule.
std::pair<QuadExt, QuadExt> solve_rays(const ExactClass& r1, const ExactClass& r2, const QuadExt& inv_det,
                                       const ExactClass& x) {
  return {(x.u * r2.v - r2.u * x.v) * inv_det, (r1.u * x.v - x.u * r1.v) * inv_det};
}

Rational chamber_interior_volume(int n, const std::vector<BigInt>& inters) {
  Rational total;
  for (int j = 0; j <= n; ++j) total += Rational(binomial(n, j) * inters[j]);
  return total;
}

void validate_chamber(int n, const IntMat2& transition, const std::vector<BigInt>& inters, std::size_t index) {
  const std::string where = "chamber " + std::to_string(index);
  if (inters.size() != static_cast<std::size_t>(n + 1)) {
    throw MathError(ErrorCode::bad_chamber, where + ": expected " + std::to_string(n + 1) + " intersection numbers, got " +
                                                std::to_string(inters.size()));
  }
  const BigInt det = transition.det();
  if (det != 1 && det != -1) throw MathError(ErrorCode::bad_chamber, where + ": transition matrix is not unimodular");
  for (const auto& x : inters) {
    if (sgn(x) < 0) throw MathError(ErrorCode::bad_chamber, where + ": non-positive chamber data (negative intersection number)");
  }
  if (chamber_interior_volume(n, inters).sign() <= 0) {
    throw MathError(ErrorCode::bad_chamber, where + ": non-positive chamber data (interior class has zero volume)");
  }
}

}  // namespace

FloatClass to_float(const ExactClass& d) { return {d.u.to_double(), d.v.to_double()}; }

ExactClass exact_class(const Rational& u, const Rational& v, std::int64_t disc) {
  return {QuadExt::rational(u, disc), QuadExt::rational(v, disc)};
}

IntMat2 IntMat2::inverse() const {
  const BigInt dt = det();
  if (dt != 1 && dt != -1) throw MathError(ErrorCode::bad_determinant, "matrix is not invertible over the integers");
  return {dt * d, -dt * b, -dt * c, dt * a};
}

IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

ExactClass operator*(const IntMat2& m, const ExactClass& x) {
  return {x.u * to_rational(m.a) + x.v * to_rational(m.b), x.u * to_rational(m.c) + x.v * to_rational(m.d)};
}

FloatClass operator*(const IntMat2& m, const FloatClass& x) {
  return {m.a.get_d() * x.u + m.b.get_d() * x.v, m.c.get_d() * x.u + m.d.get_d() * x.v};
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

EigenRays eigen_rays(const IntMat2& m) {
  const BigInt det = m.det();
  if (det != 1 && det != -1) {
    throw MathError(ErrorCode::bad_determinant, "determinant " + to_string(det) + " is not +-1");
  }
  const BigInt t = m.trace();
  if (det == 1 && abs(t) <= 2) {
    throw MathError(ErrorCode::not_hyperbolic, abs(t) == 2 ? "parabolic action: spectral radius 1"
                                                           : "elliptic action: spectral radius 1");
  }
  if (det == -1 && t == 0) throw MathError(ErrorCode::not_hyperbolic, "eigenvalues +-1: spectral radius 1");

  EigenRays out;
  IntMat2 a = m;
  if (det != 1 || t < 0) {
    a = m * m;
    out.squared = true;
  }
  const BigInt ta = a.trace();
  const BigInt delta = ta * ta - 4;
  const BigInt d = squarefree_part(delta);
  if (!d.fits_slong_p()) throw MathError(ErrorCode::invalid_disc, "discriminant too large: " + to_string(d));
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), BigInt(delta / d).get_mpz_t());
  out.disc = d.get_si();
  out.lambda = QuadExt(Rational(ta, 2), Rational(s, 2), out.disc);

  // (b, mu - a00) solves the first row; b != 0 for hyperbolic det-1 matrices.
  auto ray = [&](const QuadExt& mu) {
    ExactClass r{QuadExt::rational(Rational(a.b), out.disc), mu - QuadExt::rational(Rational(a.a), out.disc)};
    const QuadExt sum = r.u + r.v;
    if (sum.is_zero()) throw MathError(ErrorCode::inconsistent_model, "eigen-ray has zero coordinate sum");
    const QuadExt inv = sum.inverse();
    return ExactClass{r.u * inv, r.v * inv};
  };
  out.r1 = ray(out.lambda);
  out.r2 = ray(out.lambda.conj());
  return out;
}

const IntMat2& ConeModel::t1() const {
  if (!t1_) throw MathError(ErrorCode::missing_generators, "model " + id_ + " has no generator t1");
  return *t1_;
}

const IntMat2& ConeModel::t2() const {
  if (!t2_) throw MathError(ErrorCode::missing_generators, "model " + id_ + " has no generator t2");
  return *t2_;
}

ExactClass ConeModel::ample_class() const {
  return exact_class(Rational(ample_[0]), Rational(ample_[1]), disc_);
}

ConeModel build_custom(const ModelSpec& spec) {
  if (spec.dim < 1) throw MathError(ErrorCode::bad_dimension, "dimension must be positive");
  if (spec.t1.has_value() != spec.t2.has_value()) {
    throw MathError(ErrorCode::missing_generators, "generators t1 and t2 must be given together");
  }
  ConeModel m;
  m.id_ = spec.id;
  m.dim_ = spec.dim;
  m.square_action_ = spec.square_action;

  if (spec.t1) {
    if (!(*spec.t1 * *spec.t1).is_identity()) throw MathError(ErrorCode::not_involution, "generator t1 is not an involution");
    if (!(*spec.t2 * *spec.t2).is_identity()) throw MathError(ErrorCode::not_involution, "generator t2 is not an involution");
    m.t1_ = spec.t1;
    m.t2_ = spec.t2;
  }
  if (spec.f) {
    m.f_ = *spec.f;
    if (spec.t1 && !(*spec.t2 * *spec.t1 == m.f_)) {
      throw MathError(ErrorCode::inconsistent_model, "f does not equal t2 * t1");
    }
  } else if (spec.t1) {
    m.f_ = *spec.t2 * *spec.t1;
  } else {
    throw MathError(ErrorCode::missing_generators, "model needs f or the generators t1, t2");
  }
  const BigInt det = m.f_.det();
  if (det != 1 && det != -1) throw MathError(ErrorCode::bad_determinant, "det(f) = " + to_string(det) + " is not +-1");

  m.action_ = m.square_action_ ? m.f_ * m.f_ : m.f_;
  m.action_inv_ = m.action_.inverse();
  const EigenRays eig = eigen_rays(m.action_);
  if (eig.squared) {
    throw MathError(ErrorCode::rays_not_fixed,
                    "the action does not fix the extremal rays (eigenvalues not both positive); set square_action");
  }
  m.disc_ = eig.disc;
  m.lambda_ = eig.lambda;
  m.r1_ = eig.r1;
  m.r2_ = eig.r2;
  m.inv_ray_det_ = (m.r1_.u * m.r2_.v - m.r2_.u * m.r1_.v).inverse();

  m.declared_.push_back({IntMat2::identity(), spec.inters});
  for (const auto& c : spec.extra_chambers) m.declared_.push_back(c);
  for (std::size_t i = 0; i < m.declared_.size(); ++i) {
    validate_chamber(spec.dim, m.declared_[i].transition, m.declared_[i].inters, i);
  }

  m.ample_ = spec.ample;
  if (sgn(m.ample_[0]) <= 0 || sgn(m.ample_[1]) <= 0) {
    throw MathError(ErrorCode::bad_ample, "ample class must have positive nef coordinates");
  }
  {
    const auto [b1, b2] = solve_rays(m.r1_, m.r2_, m.inv_ray_det_, m.ample_class());
    if (b1.sign() != Sign::positive || b2.sign() != Sign::positive) {
      throw MathError(ErrorCode::bad_ample, "ample class lies outside the cone spanned by the eigen-rays");
    }
  }

  if (spec.disc && *spec.disc != m.disc_) {
    throw MathError(ErrorCode::inconsistent_model, "declared disc " + std::to_string(*spec.disc) +
                                                       " differs from computed " + std::to_string(m.disc_));
  }
  if (spec.lambda && QuadExt::from_tuple(*spec.lambda, m.disc_) != m.lambda_) {
    throw MathError(ErrorCode::inconsistent_model, "declared lambda differs from the spectral radius of the action");
  }
  auto check_ray = [&](const auto& declared, const ExactClass& computed, const char* name) {
    if (!declared) return;
    const ExactClass r{QuadExt::from_tuple((*declared)[0], m.disc_), QuadExt::from_tuple((*declared)[1], m.disc_)};
    if (!(r == computed)) throw MathError(ErrorCode::inconsistent_model, std::string("declared ") + name + " differs from the computed eigen-ray");
  };
  check_ray(spec.r1, m.r1_, "R1");
  check_ray(spec.r2, m.r2_, "R2");

  for (const auto& c : m.declared_) m.core_.push_back({c.transition, c.transition.inverse(), c.inters});
  if (m.t1_) {
    for (const auto& c : m.declared_) {
      const IntMat2 t = *m.t1_ * c.transition;
      m.core_.push_back({t, t.inverse(), c.inters});
    }
  }

  m.lambda_f_ = m.lambda_.to_double();
  m.log_lambda_ = m.lambda_.log_abs();
  m.r1_f_ = to_float(m.r1_);
  m.r2_f_ = to_float(m.r2_);
  m.inv_ray_det_f_ = m.inv_ray_det_.to_double();

  // Range of log L2 over the core chambers' boundary rays.
  m.core_log_l2_lo_ = std::numeric_limits<double>::infinity();
  m.core_log_l2_hi_ = -std::numeric_limits<double>::infinity();
  bool reference_inside_mov = true;
  for (std::size_t ci = 0; ci < m.core_.size(); ++ci) {
    const auto& c = m.core_[ci];
    for (const ExactClass& ray : {exact_class(Rational(c.transition.a), Rational(c.transition.c), m.disc_),
                                  exact_class(Rational(c.transition.b), Rational(c.transition.d), m.disc_)}) {
      const auto [a1, a2] = solve_rays(m.r1_, m.r2_, m.inv_ray_det_, ray);
      if (a1.sign() != Sign::positive || a2.sign() != Sign::positive) {
        if (ci == 0) reference_inside_mov = false;
        if (a1.sign() != Sign::positive) m.core_log_l2_lo_ = -std::numeric_limits<double>::infinity();
        if (a2.sign() != Sign::positive) m.core_log_l2_hi_ = std::numeric_limits<double>::infinity();
        continue;
      }
      const double l = a1.log_abs() - a2.log_abs();
      m.core_log_l2_lo_ = std::min(m.core_log_l2_lo_, l);
      m.core_log_l2_hi_ = std::max(m.core_log_l2_hi_, l);
    }
  }

  if (m.t1_ && m.declared_.size() == 1 && reference_inside_mov && !m.square_action_) {
    const IntMat2& a = *m.t1_;
    const IntMat2& b = *m.t2_;
    m.dihedral_ = a.a == 1 && a.c == 0 && sgn(a.d) < 0 && b.d == 1 && b.b == 0 && sgn(b.a) < 0;
  }
  return m;
}

ModelSpec oguiso_spec(int n) {
  if (n < 3) throw MathError(ErrorCode::bad_dimension, "the Oguiso construction needs N >= 3 (got " + std::to_string(n) + ")");
  ModelSpec spec;
  spec.id = "oguiso-" + std::to_string(n);
  spec.dim = n;
  spec.inters = oguiso_intersections_closed_form(n);
  const BigInt two_n = 2 * n;
  spec.t1 = IntMat2{1, two_n, 0, -1};
  spec.t2 = IntMat2{-1, 0, two_n, 1};
  spec.f = *spec.t2 * *spec.t1;
  spec.ample = {1, 1};
  return spec;
}

ConeModel build_oguiso(int n) {
  ModelSpec spec = oguiso_spec(n);
  if (spec.inters != oguiso_intersections_by_expansion(n)) {
    throw MathError(ErrorCode::inconsistent_model, "closed-form intersection numbers disagree with the Chow ring expansion");
  }
  return build_custom(spec);
}

std::vector<BigInt> oguiso_intersections_closed_form(int n) {
  std::vector<BigInt> out;
  for (int j = 0; j <= n; ++j) out.push_back(2 * binomial(n, j));
  return out;
}

std::vector<BigInt> oguiso_intersections_by_expansion(int n) {
  // Dense coefficients c[i][k] of x^i y^k, truncated at degree n in each
  // variable (x^(n+1) = y^(n+1) = 0 in the Chow ring of P^n x P^n).
  using Poly = std::vector<std::vector<BigInt>>;
  const auto size = static_cast<std::size_t>(n + 1);
  auto mul = [&](const Poly& p, const Poly& q) {
    Poly r(size, std::vector<BigInt>(size, 0));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t k = 0; k < size; ++k) {
        if (p[i][k] == 0) continue;
        for (std::size_t i2 = 0; i2 + i < size; ++i2)
          for (std::size_t k2 = 0; k2 + k < size; ++k2) r[i + i2][k + k2] += p[i][k] * q[i2][k2];
      }
    return r;
  };
  Poly one(size, std::vector<BigInt>(size, 0));
  one[0][0] = 1;
  Poly linear = one;
  linear[0][0] = 0;
  linear[1][0] = 1;
  linear[0][1] = 1;
  // [X] = (x+y)^(n-1) * 2(x+y)
  Poly cls = one;
  for (int i = 0; i < n; ++i) cls = mul(cls, linear);
  for (auto& row : cls)
    for (auto& c : row) c *= 2;
  std::vector<BigInt> out;
  for (int j = 0; j <= n; ++j) {
    Poly mono(size, std::vector<BigInt>(size, 0));
    mono[static_cast<std::size_t>(j)][static_cast<std::size_t>(n - j)] = 1;
    out.push_back(mul(cls, mono)[size - 1][size - 1]);
  }
  return out;
}

// ---------------------------------------------------------------- JSON

json quad_to_json(const QuadExt& x) {
  const auto t = x.to_tuple();
  return json::array({t[0], t[1], t[2], t[3]});
}

QuadExt quad_from_json(const json& j, std::int64_t disc, const std::string& path) {
  try {
    return QuadExt::from_tuple(json_tuple(j, path), disc);
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

json class_to_json(const ExactClass& c) { return json::array({quad_to_json(c.u), quad_to_json(c.v)}); }

json to_json(const ConeModel& model) {
  json doc;
  doc["id"] = model.id();
  doc["dim"] = model.dim();
  doc["disc"] = std::to_string(model.disc());
  doc["inters"] = int_list_to_json(model.inters());
  if (model.has_generators()) {
    doc["T1"] = matrix_to_json(model.t1());
    doc["T2"] = matrix_to_json(model.t2());
  }
  doc["f"] = matrix_to_json(model.f());
  doc["square_action"] = model.square_action();
  doc["lambda"] = quad_to_json(model.lambda());
  doc["R1"] = class_to_json(model.r1());
  doc["R2"] = class_to_json(model.r2());
  doc["ample"] = json::array({to_string(model.ample()[0]), to_string(model.ample()[1])});
  if (model.declared_chambers().size() > 1) {
    json chambers = json::array();
    for (std::size_t i = 1; i < model.declared_chambers().size(); ++i) {
      const auto& c = model.declared_chambers()[i];
      chambers.push_back({{"transition", matrix_to_json(c.transition)}, {"inters", int_list_to_json(c.inters)}});
    }
    doc["chambers"] = chambers;
  }
  return doc;
}

ModelSpec spec_from_json(const json& doc) {
  const std::string root = "$";
  if (!doc.is_object()) throw SchemaError(root, "model document must be an object");
  ModelSpec spec;
  if (auto it = doc.find("id"); it != doc.end()) {
    if (!it->is_string()) throw SchemaError(root + ".id", "expected a string");
    spec.id = it->get<std::string>();
  }
  {
    const BigInt dim = json_bigint(require(doc, "dim", root), root + ".dim");
    if (!dim.fits_sint_p() || dim < 1) throw SchemaError(root + ".dim", "expected a positive integer");
    spec.dim = static_cast<int>(dim.get_si());
  }
  spec.inters = json_int_list(require(doc, "inters", root), root + ".inters");
  if (doc.contains("T1") || doc.contains("T2")) {
    spec.t1 = json_matrix(require(doc, "T1", root), root + ".T1");
    spec.t2 = json_matrix(require(doc, "T2", root), root + ".T2");
  }
  if (doc.contains("f")) spec.f = json_matrix(doc.at("f"), root + ".f");
  if (auto it = doc.find("ample"); it != doc.end()) {
    const auto v = json_int_list(*it, root + ".ample");
    if (v.size() != 2) throw SchemaError(root + ".ample", "expected 2 coordinates");
    spec.ample = {v[0], v[1]};
  }
  if (auto it = doc.find("square_action"); it != doc.end()) {
    if (!it->is_boolean()) throw SchemaError(root + ".square_action", "expected a boolean");
    spec.square_action = it->get<bool>();
  }
  if (auto it = doc.find("chambers"); it != doc.end()) {
    if (!it->is_array()) throw SchemaError(root + ".chambers", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = path_index(root + ".chambers", i);
      const json& c = (*it)[i];
      spec.extra_chambers.push_back(
          {json_matrix(require(c, "transition", p), p + ".transition"), json_int_list(require(c, "inters", p), p + ".inters")});
    }
  }
  if (auto it = doc.find("disc"); it != doc.end()) {
    const BigInt d = json_bigint(*it, root + ".disc");
    if (!d.fits_slong_p() || d < 1) throw SchemaError(root + ".disc", "expected a positive integer");
    spec.disc = d.get_si();
  }
  if (doc.contains("lambda")) spec.lambda = json_tuple(doc.at("lambda"), root + ".lambda");
  if (doc.contains("R1")) spec.r1 = json_ray(doc.at("R1"), root + ".R1");
  if (doc.contains("R2")) spec.r2 = json_ray(doc.at("R2"), root + ".R2");
  return spec;
}

ConeModel model_from_json(const json& doc) { return build_custom(spec_from_json(doc)); }

}  // namespace birvol
