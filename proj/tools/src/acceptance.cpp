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

#include "birvol/cli/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "birvol/cli/io.hpp"
#include "birvol/cli/samplers.hpp"
#include "birvol/dynamics.hpp"
#include "birvol/errors.hpp"
#include "birvol/hk.hpp"
#include "birvol/kappa.hpp"
#include "birvol/lattice_model.hpp"
#include "birvol/volume.hpp"

namespace birvol::cli {

namespace {

constexpr int kSamples = 100;
constexpr std::size_t kMaxWord = 6;
constexpr int kDyadicMax = 18;
constexpr int kHkFixtures = 20;
constexpr int kHkMaxM = 100;

CriterionResult make(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.data = nlohmann::json::object();
  return r;
}

ExactClass scale(const ExactClass& d, const Rational& k) { return {d.u * k, d.v * k}; }

std::string series_csv(const kappa::GrowthSeries& s, double claim) {
  std::string out = csv_line({"m", "vol", "L1", "L2_reduced", "ratio_to_claim"});
  for (const auto& e : s.entries) {
    const double ratio = std::exp(e.log_vol - claim * std::log(static_cast<double>(e.m)));
    out += csv_line({std::to_string(e.m), format_double(e.vol), format_double(e.l1), format_double(e.l2_reduced),
                     format_double(ratio)});
  }
  return out;
}

}  // namespace

CriterionResult criterion_eigenvalues() {
  CriterionResult r = make(1, "eigenvalue reproduction");
  int bad = 0;
  for (int n = 3; n <= 10; ++n) {
    const ConeModel m = build_oguiso(n);
    const BigInt radicand = BigInt(n) * n - 1;
    const BigInt d = squarefree_part(radicand);
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), BigInt(radicand / d).get_mpz_t());
    const bool same_field = m.disc() == d.get_si();
    const bool ok = same_field && m.lambda() == QuadExt(Rational(2 * n * n - 1), Rational(BigInt(2 * n) * s), d.get_si());
    if (!ok) ++bad;
    r.data["N" + std::to_string(n)] = m.lambda().to_string();
  }
  r.pass = bad == 0;
  r.detail = "N=3..10, " + std::to_string(bad) + " mismatches";
  return r;
}

CriterionResult criterion_intersections() {
  CriterionResult r = make(2, "intersection oracle equivalence");
  int bad = 0;
  for (int n = 3; n <= 10; ++n) {
    if (oguiso_intersections_closed_form(n) != oguiso_intersections_by_expansion(n)) ++bad;
  }
  r.pass = bad == 0;
  r.detail = "N=3..10, " + std::to_string(bad) + " mismatches";
  return r;
}

CriterionResult criterion_l1_invariance(std::uint64_t seed) {
  CriterionResult r = make(3, "L1 invariance");
  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < kSamples; ++i) {
    const ConeModel m = build_oguiso(3 + i % 4);
    const ExactClass d = random_movable_class(m, rng);
    const dynamics::Word w = random_word(m, rng, kMaxWord);
    const auto l = dynamics::l_coords(m, d);
    const auto lw = dynamics::l_coords(m, dynamics::apply(m, w, d));
    const auto lf = dynamics::l_coords(m, m.f() * d);
    const auto lfi = dynamics::l_coords(m, m.f().inverse() * d);
    const QuadExt l2 = m.lambda() * m.lambda();
    const bool ok = lw.l1 == l.l1 && lf.l1 == l.l1 && lfi.l1 == l.l1 && lf.l2 == l2 * l.l2 && lfi.l2 * l2 == l.l2;
    if (!ok) ++bad;
  }
  r.pass = bad == 0;
  r.detail = std::to_string(kSamples) + " classes, words <= " + std::to_string(kMaxWord) + ", " + std::to_string(bad) +
             " failures";
  r.data["seed"] = seed;
  return r;
}

CriterionResult criterion_volume_invariance(std::uint64_t seed) {
  CriterionResult r = make(4, "volume invariance and homogeneity");
  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < kSamples; ++i) {
    const int n = 3 + i % 4;
    const ConeModel m = build_oguiso(n);
    const ExactClass d = random_movable_class(m, rng);
    const dynamics::Word w = random_word(m, rng, kMaxWord);
    const QuadExt vol = volume::vol_movable(m, d);
    bool ok = volume::vol_movable(m, dynamics::apply(m, w, d)) == vol;
    for (int k = 1; k <= 5; ++k) {
      ok = ok && volume::vol_movable(m, scale(d, Rational(k))) == vol * Rational(k).pow(static_cast<unsigned>(n));
    }
    if (!ok) ++bad;
  }
  r.pass = bad == 0;
  r.detail = std::to_string(kSamples) + " classes, k = 1..5, " + std::to_string(bad) + " failures";
  r.data["seed"] = seed;
  return r;
}

CriterionResult criterion_growth(unsigned threads, Artifacts& artifacts) {
  CriterionResult r = make(5, "growth exponent n/2 along the extremal rays");
  r.pass = true;
  nlohmann::json cases = nlohmann::json::array();
  std::string summary;
  for (int n = 3; n <= 6; ++n) {
    const ConeModel m = build_oguiso(n);
    for (int ray = 1; ray <= 2; ++ray) {
      const ExactClass& d = ray == 1 ? m.r1() : m.r2();
      const auto series = kappa::growth_series(m, d, m.ample_class(), kappa::Schedule::dyadic(kDyadicMax), threads);
      const double claim = n / 2.0;
      const auto fit = kappa::fit_exponent(series, claim);
      const auto verdict = kappa::assess(fit);
      r.pass = r.pass && verdict.pass();
      const std::string tag = "N" + std::to_string(n) + "_R" + std::to_string(ray);
      artifacts["growth_" + tag + ".csv"] = series_csv(series, claim);
      cases.push_back({{"N", n}, {"ray", "R" + std::to_string(ray)}, {"l_hat", fit.l_hat}, {"claim", claim},
                       {"residual", fit.residual}, {"band", {fit.ratio_min, fit.ratio_max}}, {"band_ratio", fit.band()},
                       {"drift", fit.drift}, {"pass", verdict.pass()}});
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s%s l=%.4f band=%.2f%s", summary.empty() ? "" : "; ", tag.c_str(), fit.l_hat,
                    fit.band(), verdict.pass() ? "" : " (fail)");
      summary += buf;
    }
  }
  r.detail = summary;
  r.data["cases"] = cases;
  return r;
}

CriterionResult criterion_ample_independence(unsigned threads) {
  CriterionResult r = make(6, "ample independence");
  const ConeModel m = build_oguiso(3);
  std::vector<ExactClass> amples;
  for (auto [u, v] : {std::pair{1, 1}, std::pair{2, 3}, std::pair{5, 1}}) {
    amples.push_back(exact_class(Rational(u), Rational(v), m.disc()));
  }
  const auto rep = kappa::independence_check(m, m.r1(), amples, kappa::Schedule::dyadic(kDyadicMax), threads);
  r.pass = rep.pass;
  char buf[128];
  std::snprintf(buf, sizeof buf, "N=3 R1, A in {(1,1),(2,3),(5,1)}: max deviation %.4f (< %.2f)", rep.max_deviation,
                kappa::kAgreementTolerance);
  r.detail = buf;
  r.data["exponents"] = rep.exponents;
  r.data["max_deviation"] = rep.max_deviation;
  return r;
}

CriterionResult criterion_multiples(unsigned threads) {
  CriterionResult r = make(7, "multiple invariance");
  const ConeModel m = build_oguiso(3);
  const auto rep = kappa::multiple_check(m, m.r1(), m.ample_class(), {2, 3}, kappa::Schedule::dyadic(kDyadicMax), threads);
  r.pass = rep.pass;
  double worst = 0;
  for (double dev : rep.deviations) worst = std::max(worst, dev);
  char buf[128];
  std::snprintf(buf, sizeof buf, "N=3 R1, k in {2,3}: max deviation %.4f (< %.2f)", worst, kappa::kAgreementTolerance);
  r.detail = buf;
  r.data["base"] = rep.base_exponent;
  r.data["exponents"] = rep.exponents;
  return r;
}

CriterionResult criterion_floor_bounds(std::uint64_t seed) {
  CriterionResult r = make(8, "floor perturbation bounds");
  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < kSamples; ++i) {
    const ConeModel m = build_oguiso(3 + i % 4);
    const auto expr = random_expression(m, rng);
    const auto k = volume::floor_constants(m, expr);
    const ExactClass a = ample_above(m, k.c2, rng);
    if (!volume::lemma44_check(m, expr, a).pass) ++bad;
  }
  r.pass = bad == 0;
  r.detail = std::to_string(kSamples) + " expressions, " + std::to_string(bad) + " failures";
  r.data["seed"] = seed;
  return r;
}

CriterionResult criterion_hk_boundary(std::uint64_t seed) {
  CriterionResult r = make(9, "exact boundary growth on hyperkahler fixtures");
  int bad = 0;
  int degenerate_ok = 0;
  for (int i = 0; i < kHkFixtures; ++i) {
    const auto fx = hk::random_fixture(seed + static_cast<std::uint64_t>(i));
    const auto g = hk::kappa_boundary(fx.model, fx.d, fx.a);
    bool ok = g.exponent == fx.model.d() && static_cast<int>(g.poly.size()) == fx.model.d() + 1;
    for (int mm = 1; mm <= kHkMaxM && ok; ++mm) {
      hk::Vec x(fx.model.rho());
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = Rational(mm) * fx.d[j] + fx.a[j];
      ok = hk::eval_poly(g.poly, Rational(mm)) == hk::vol_hk(fx.model, x);
    }
    if (!ok) ++bad;
    try {
      hk::kappa_boundary(fx.model, hk::Vec(fx.model.rho()), fx.a);
    } catch (const MathError& e) {
      if (e.code() == ErrorCode::hodge_degenerate) ++degenerate_ok;
    }
  }
  r.pass = bad == 0 && degenerate_ok == kHkFixtures;
  r.detail = std::to_string(kHkFixtures) + " fixtures, m <= " + std::to_string(kHkMaxM) + ", " + std::to_string(bad) +
             " failures; degenerate case raised on " + std::to_string(degenerate_ok) + "/" + std::to_string(kHkFixtures);
  r.data["seed"] = seed;
  return r;
}

std::vector<CriterionResult> run_core_criteria(const AcceptanceOptions& opts, Artifacts& artifacts) {
  std::vector<CriterionResult> out;
  out.push_back(criterion_eigenvalues());
  out.push_back(criterion_intersections());
  out.push_back(criterion_l1_invariance(opts.seed));
  out.push_back(criterion_volume_invariance(opts.seed));
  out.push_back(criterion_growth(opts.threads, artifacts));
  out.push_back(criterion_ample_independence(opts.threads));
  out.push_back(criterion_multiples(opts.threads));
  out.push_back(criterion_floor_bounds(opts.seed));
  out.push_back(criterion_hk_boundary(opts.seed));
  artifacts["criteria.json"] = dump_json(manifest(out, opts));
  return out;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, Artifacts& artifacts) {
  Artifacts first;
  std::vector<CriterionResult> out = run_core_criteria(opts, first);
  AcceptanceOptions again = opts;
  again.threads = opts.threads == 1 ? 2 : 1;
  Artifacts second;
  run_core_criteria(again, second);

  CriterionResult r = make(10, "determinism");
  std::size_t differing = 0;
  for (const auto& [name, bytes] : first) {
    const auto it = second.find(name);
    if (it == second.end() || it->second != bytes) ++differing;
  }
  if (second.size() != first.size()) ++differing;
  r.pass = differing == 0;
  r.detail = std::to_string(first.size()) + " artifacts compared across two runs, " + std::to_string(differing) + " differ";
  out.push_back(r);

  artifacts = std::move(first);
  artifacts["acceptance.json"] = dump_json(manifest(out, opts));
  return out;
}

nlohmann::json manifest(const std::vector<CriterionResult>& results, const AcceptanceOptions& opts) {
  nlohmann::json doc;
  doc["seed"] = opts.seed;
  bool all = true;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"data", r.data}});
  }
  doc["criteria"] = list;
  doc["all_pass"] = all;
  return doc;
}

std::string format_line(const CriterionResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail;
}

}  // namespace birvol::cli
