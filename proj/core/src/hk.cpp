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

#include "birvol/hk.hpp"

#include <random>
#include <utility>

#include "birvol/errors.hpp"

namespace birvol::hk {

namespace {

void require_length(const HKModel& model, const Vec& x, const char* name) {
  if (x.size() != model.rho()) {
    throw MathError(ErrorCode::bad_dimension, std::string(name) + " has " + std::to_string(x.size()) +
                                                  " coordinates, expected rho = " + std::to_string(model.rho()));
  }
}

std::vector<Rational> poly_mul(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

using Mat = std::vector<std::vector<BigInt>>;

Mat mat_mul(const Mat& x, const Mat& y) {
  const std::size_t n = x.size();
  Mat out(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

Mat transpose(const Mat& x) {
  Mat out = x;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i][j] = x[j][i];
  return out;
}

Mat identity(std::size_t n) {
  Mat out(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

BigInt json_integer(const nlohmann::json& j, const std::string& path) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_bigint(j.get<std::string>());
    } catch (const SchemaError& e) {
      throw SchemaError(path, e.detail());
    }
  }
  throw SchemaError(path, "expected an integer");
}

}  // namespace

Signature signature(const std::vector<std::vector<BigInt>>& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram[i][j]);
  Signature s;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][p].is_zero()) ++p;
      if (p < n) {
        std::swap(a[k], a[p]);
        for (auto& row : a) std::swap(row[k], row[p]);
      } else {
        // Zero diagonal: add a row/column with a nonzero off-diagonal entry.
        std::size_t q = k + 1;
        while (q < n && a[k][q].is_zero()) ++q;
        if (q == n) {
          ++s.zero;
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) a[k][j] += a[q][j];
        for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][q];
      }
    }
    const Rational pivot = a[k][k];
    (pivot.sign() > 0 ? s.positive : s.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / pivot;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][k];
    }
  }
  return s;
}

HKModel::HKModel(std::vector<std::vector<BigInt>> gram, Rational c_x, int d)
    : gram_(std::move(gram)), c_x_(std::move(c_x)), d_(d) {
  const std::size_t n = gram_.size();
  if (n == 0) throw MathError(ErrorCode::bad_dimension, "gram matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw MathError(ErrorCode::bad_dimension, "gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw MathError(ErrorCode::bad_signature, "gram matrix is not symmetric");
  const Signature s = signature(gram_);
  if (s.positive != 1 || s.negative != static_cast<int>(n) - 1) {
    throw MathError(ErrorCode::bad_signature, "gram signature is (" + std::to_string(s.positive) + "," +
                                                  std::to_string(s.negative) + "," + std::to_string(s.zero) +
                                                  "), expected (1," + std::to_string(n - 1) + ",0)");
  }
  if (c_x_.sign() <= 0) throw MathError(ErrorCode::bad_signature, "Fujiki constant must be positive");
  if (d_ < 1) throw MathError(ErrorCode::bad_dimension, "half-dimension d must be at least 1");
}

Rational q_pair(const HKModel& model, const Vec& d, const Vec& a) {
  require_length(model, d, "D");
  require_length(model, a, "A");
  Rational acc;
  for (std::size_t i = 0; i < model.rho(); ++i) {
    if (d[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < model.rho(); ++j) row += Rational(model.gram()[i][j]) * a[j];
    acc += d[i] * row;
  }
  return acc;
}

Rational q_eval(const HKModel& model, const Vec& d) { return q_pair(model, d, d); }

std::string_view to_string(HKClass c) {
  switch (c) {
    case HKClass::big: return "big";
    case HKClass::boundary_non_big: return "boundary_non_big";
    case HKClass::invalid: return "invalid";
  }
  return "?";
}

HKClass classify(const HKModel& model, const Vec& d) {
  const int s = q_eval(model, d).sign();
  if (s > 0) return HKClass::big;
  if (s == 0) return HKClass::boundary_non_big;
  return HKClass::invalid;
}

Rational vol_hk(const HKModel& model, const Vec& d) {
  const Rational q = q_eval(model, d);
  if (q.sign() < 0) throw MathError(ErrorCode::negative_q, "q(D) = " + q.to_string() + " < 0; D cannot be movable");
  return model.c_x() * q.pow(static_cast<unsigned>(model.d()));
}

BoundaryGrowth kappa_boundary(const HKModel& model, const Vec& d, const Vec& a) {
  const Rational qd = q_eval(model, d);
  const Rational qa = q_eval(model, a);
  const Rational qda = q_pair(model, d, a);
  if (qa.sign() <= 0) throw MathError(ErrorCode::bad_ample, "q(A) = " + qa.to_string() + " is not positive");
  if (qd.sign() < 0) throw MathError(ErrorCode::not_boundary_class, "not a boundary class: q(D) = " + qd.to_string() + " < 0");
  if (qda.is_zero()) {
    throw MathError(ErrorCode::hodge_degenerate, "q(D, A) = 0 with A ample and D movable forces D == 0 numerically");
  }
  if (qda.sign() < 0) {
    throw MathError(ErrorCode::hypothesis_violation, "q(D, A) = " + qda.to_string() + " < 0; D is not on the side of A");
  }
  BoundaryGrowth g;
  std::vector<Rational> base;
  if (qd.is_zero()) {
    g.exponent = model.d();
    base = {qa, Rational(2) * qda};
  } else {
    g.exponent = 2 * model.d();
    base = {qa, Rational(2) * qda, qd};
    g.note = "q(D) > 0: D is big and vol(mD + A) grows like m^(2d)";
  }
  g.poly = {model.c_x()};
  for (int i = 0; i < model.d(); ++i) g.poly = poly_mul(g.poly, base);
  return g;
}

Rational eval_poly(const std::vector<Rational>& poly, const Rational& m) {
  Rational acc;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * m + *it;
  return acc;
}

Fixture random_fixture(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const std::size_t rho = static_cast<std::size_t>(pick(2, 4));
  Mat g0(rho, std::vector<BigInt>(rho, 0));
  g0[0][1] = g0[1][0] = 1;
  for (std::size_t i = 2; i < rho; ++i) g0[i][i] = -2 * pick(1, 3);

  // P and its inverse as products of elementary shears.
  Mat p = identity(rho);
  Mat p_inv = identity(rho);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(rho) - 1));
    std::size_t j = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(rho) - 2));
    if (j >= i) ++j;
    const std::int64_t t = pick(-2, 2);
    if (t == 0) continue;
    Mat e = identity(rho);
    Mat e_inv = identity(rho);
    e[i][j] = t;
    e_inv[i][j] = -t;
    p = mat_mul(p, e);
    p_inv = mat_mul(e_inv, p_inv);
  }
  const Mat gram = mat_mul(mat_mul(transpose(p), g0), p);

  Vec a0(rho);
  a0[0] = Rational(pick(1, 4));
  a0[1] = Rational(pick(1, 4));
  BigInt budget = 2 * a0[0].num() * a0[1].num();
  for (std::size_t i = 2; i < rho; ++i) {
    const std::int64_t z = pick(0, 1);
    if (z != 0 && budget + g0[i][i] > 0) {
      a0[i] = Rational(z);
      budget += g0[i][i];
    }
  }
  Vec d(rho);
  Vec a(rho);
  for (std::size_t i = 0; i < rho; ++i) {
    d[i] = Rational(p_inv[i][0]);
    for (std::size_t j = 0; j < rho; ++j) a[i] += Rational(p_inv[i][j]) * a0[j];
  }
  const Rational c_x(BigInt(pick(1, 12)), BigInt(pick(1, 4)));
  const int dd = static_cast<int>(pick(1, 3));
  return {HKModel(gram, c_x, dd), d, a};
}

nlohmann::json to_json(const HKModel& model) {
  nlohmann::json gram = nlohmann::json::array();
  for (const auto& row : model.gram())
    for (const auto& x : row) {
      if (x.fits_slong_p()) {
        gram.push_back(x.get_si());
      } else {
        gram.push_back(birvol::to_string(x));
      }
    }
  return {{"rho", model.rho()}, {"gram", gram}, {"c_X", model.c_x().to_string()}, {"d", model.d()}};
}

HKModel hk_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "HK model must be a JSON object");
  for (const char* key : {"rho", "gram", "c_X", "d"}) {
    if (!doc.contains(key)) throw SchemaError(std::string("$.") + key, "missing field");
  }
  if (!doc["rho"].is_number_integer() || doc["rho"].get<std::int64_t>() < 1) {
    throw SchemaError("$.rho", "expected a positive integer");
  }
  const auto rho = static_cast<std::size_t>(doc["rho"].get<std::int64_t>());
  const auto& g = doc["gram"];
  if (!g.is_array()) throw SchemaError("$.gram", "expected an array");
  std::vector<std::vector<BigInt>> gram(rho, std::vector<BigInt>(rho));
  if (g.size() == rho * rho && (rho == 1 || !g[0].is_array())) {
    for (std::size_t k = 0; k < g.size(); ++k) gram[k / rho][k % rho] = json_integer(g[k], "$.gram[" + std::to_string(k) + "]");
  } else if (g.size() == rho) {
    for (std::size_t i = 0; i < rho; ++i) {
      const std::string row_path = "$.gram[" + std::to_string(i) + "]";
      if (!g[i].is_array() || g[i].size() != rho) throw SchemaError(row_path, "expected a row of length rho");
      for (std::size_t j = 0; j < rho; ++j) gram[i][j] = json_integer(g[i][j], row_path + "[" + std::to_string(j) + "]");
    }
  } else {
    throw SchemaError("$.gram", "expected rho*rho entries in row-major order");
  }
  Rational c_x;
  if (doc["c_X"].is_number_integer()) {
    c_x = json_integer(doc["c_X"], "$.c_X");
  } else if (doc["c_X"].is_string()) {
    try {
      c_x = Rational::parse(doc["c_X"].get<std::string>());
    } catch (const SchemaError& e) {
      throw SchemaError("$.c_X", e.detail());
    }
  } else {
    throw SchemaError("$.c_X", "expected an integer or a rational string such as \"1/2\"");
  }
  if (!doc["d"].is_number_integer()) throw SchemaError("$.d", "expected a positive integer");
  return HKModel(std::move(gram), std::move(c_x), doc["d"].get<int>());
}

Vec vec_from_text(std::string_view text, std::size_t rho, const std::string& path) {
  Vec out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(Rational::parse(tok));
    } catch (const SchemaError& e) {
      throw SchemaError(path, e.detail());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != rho) {
    throw SchemaError(path, "expected " + std::to_string(rho) + " coordinates, got " + std::to_string(out.size()));
  }
  return out;
}

}  // namespace birvol::hk
