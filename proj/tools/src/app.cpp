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

#include "birvol/cli/app.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "birvol/cli/acceptance.hpp"
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

using nlohmann::json;

struct Params {
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> seed;
  std::optional<int> oguiso;
  std::optional<std::string> custom;
  std::optional<std::string> hk;
  std::optional<std::uint64_t> fixture;
  std::optional<std::string> cls;
  std::optional<std::string> ample;
  std::optional<std::string> ray;
  std::optional<std::string> with;
  std::optional<int> dyadic;
  std::optional<int> k_min;
  std::optional<std::string> arithmetic;
  std::optional<double> claim;
  std::optional<std::string> amples;
  std::optional<std::string> multiples;
  std::optional<std::string> expr;
  std::optional<int> count;
};

template <class T>
void fill(std::optional<T>& slot, const json& doc, const char* key) {
  if (slot || !doc.contains(key)) return;
  const json& v = doc[key];
  const std::string path = std::string("$.") + key;
  if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string()) throw SchemaError(path, "expected a string");
    slot = v.get<std::string>();
  } else if constexpr (std::is_same_v<T, double>) {
    if (!v.is_number()) throw SchemaError(path, "expected a number");
    slot = v.get<double>();
  } else {
    if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
    if constexpr (std::is_unsigned_v<T>) {
      if (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0) {
        throw SchemaError(path, "expected a nonnegative integer");
      }
    }
    slot = v.get<T>();
  }
}

void merge_config(Params& p) {
  if (!p.config) return;
  json doc;
  try {
    doc = json::parse(read_file(*p.config));
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("$", "config must be a JSON object");
  static const std::vector<std::string> known = {"out",  "threads", "seed",       "oguiso", "custom",  "hk",
                                                 "fixture", "class", "ample",    "ray",    "with",    "dyadic",
                                                 "k_min", "arithmetic", "claim", "amples", "multiples", "expr", "count"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
      throw SchemaError("$." + it.key(), "unknown config field");
    }
  }
  fill(p.out, doc, "out");
  fill(p.threads, doc, "threads");
  fill(p.seed, doc, "seed");
  fill(p.oguiso, doc, "oguiso");
  fill(p.custom, doc, "custom");
  fill(p.hk, doc, "hk");
  fill(p.fixture, doc, "fixture");
  fill(p.cls, doc, "class");
  fill(p.ample, doc, "ample");
  fill(p.ray, doc, "ray");
  fill(p.with, doc, "with");
  fill(p.dyadic, doc, "dyadic");
  fill(p.k_min, doc, "k_min");
  fill(p.arithmetic, doc, "arithmetic");
  fill(p.claim, doc, "claim");
  fill(p.amples, doc, "amples");
  fill(p.multiples, doc, "multiples");
  fill(p.expr, doc, "expr");
  fill(p.count, doc, "count");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

Rational parse_rational(const std::string& text, const std::string& path) {
  try {
    return Rational::parse(text);
  } catch (const SchemaError& e) {
    throw SchemaError(path, e.detail());
  }
}

ConeModel load_model(const Params& p) {
  if (p.oguiso && p.custom) throw SchemaError("--custom", "give either --oguiso or --custom, not both");
  if (p.oguiso) return build_oguiso(*p.oguiso);
  if (p.custom) {
    json doc;
    try {
      doc = json::parse(read_file(*p.custom));
    } catch (const json::parse_error& e) {
      throw SchemaError("$", std::string("model file is not valid JSON: ") + e.what());
    }
    return model_from_json(doc);
  }
  throw SchemaError("--oguiso", "a model source is required (--oguiso N or --custom PATH)");
}

ExactClass parse_class(const ConeModel& m, const std::string& text, const std::string& path) {
  if (text == "R1") return m.r1();
  if (text == "R2") return m.r2();
  if (text == "A") return m.ample_class();
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw SchemaError(path, "expected a class 'u,v', R1, R2 or A; got '" + text + "'");
  return exact_class(parse_rational(parts[0], path), parse_rational(parts[1], path), m.disc());
}

json quad_json(const QuadExt& x) {
  return {{"exact", x.to_string()}, {"tuple", quad_to_json(x)}, {"decimal", x.to_double()}};
}

struct Output {
  json summary;
  std::map<std::string, std::string> files;  // extra artifacts beside summary.json
  bool pass = true;
};

kappa::Schedule schedule_from(const Params& p) {
  if (p.arithmetic) {
    const auto parts = split(*p.arithmetic, ',');
    if (parts.size() != 2) throw SchemaError("--arithmetic", "expected 'step,count'");
    try {
      return kappa::Schedule::arithmetic(std::stoll(parts[0]), std::stoll(parts[1]));
    } catch (const std::logic_error&) {
      throw SchemaError("--arithmetic", "expected integers 'step,count'");
    }
  }
  return kappa::Schedule::dyadic(p.dyadic.value_or(18), p.k_min.value_or(5));
}

std::string class_label(const Params& p) { return p.ray ? *p.ray : p.cls.value_or(""); }

ExactClass growth_direction(const ConeModel& m, const Params& p) {
  if (p.ray && p.cls) throw SchemaError("--ray", "give either --ray or --class, not both");
  if (p.ray) {
    if (*p.ray != "R1" && *p.ray != "R2") throw SchemaError("--ray", "expected R1 or R2");
    return *p.ray == "R1" ? m.r1() : m.r2();
  }
  if (p.cls) return parse_class(m, *p.cls, "--class");
  throw SchemaError("--ray", "a direction is required (--ray R1|R2 or --class u,v)");
}

std::string series_csv(const kappa::GrowthSeries& s, double claim) {
  std::string out = csv_line({"m", "vol", "L1", "L2_reduced", "ratio_to_claim"});
  for (const auto& e : s.entries) {
    const double ratio = std::exp(e.log_vol - claim * std::log(static_cast<double>(e.m)));
    out += csv_line({std::to_string(e.m), format_double(e.vol), format_double(e.l1), format_double(e.l2_reduced),
                     format_double(ratio)});
  }
  return out;
}

Output cmd_model_build(const Params& p) {
  Output o;
  o.summary = to_json(load_model(p));
  return o;
}

Output cmd_vol_eval(const Params& p) {
  const ConeModel m = load_model(p);
  if (!p.cls) throw SchemaError("--class", "vol eval needs --class");
  const ExactClass d = parse_class(m, *p.cls, "--class");
  const auto mv = volume::vol_movable_detail(m, d);
  Output o;
  o.summary = {{"model_id", m.id()},
               {"class", class_to_json(d)},
               {"vol", mv.vol.to_string()},
               {"vol_tuple", quad_to_json(mv.vol)},
               {"vol_decimal", mv.vol.to_double()},
               {"membership", std::string(dynamics::to_string(mv.membership))},
               {"word", dynamics::format_word(mv.reduction.word)},
               {"chamber", mv.reduction.chamber}};
  const auto row = volume::csv_row(m, d);
  o.files["vol.csv"] = std::string(volume::kCsvHeader) + "\n" +
                       csv_line({row.model_id, format_double(row.u), format_double(row.v), format_double(row.l1),
                                 format_double(row.l2), format_double(row.vol), std::to_string(row.word_length)});
  return o;
}

Output cmd_reduce(const Params& p) {
  const ConeModel m = load_model(p);
  if (!p.cls) throw SchemaError("--class", "reduce needs --class");
  const ExactClass d = parse_class(m, *p.cls, "--class");
  const auto r = dynamics::reduce_to_core(m, d);
  const auto l = dynamics::l_coords(m, d);
  const long bound = dynamics::power_bound(m, l.l2.log_abs());
  Output o;
  o.summary = {{"model_id", m.id()},      {"input", class_to_json(d)},
               {"word", dynamics::format_word(r.word)}, {"word_length", r.word.size()},
               {"power", r.power},        {"power_bound", bound},
               {"reduced", class_to_json(r.reduced)}, {"chamber", r.chamber},
               {"certified", r.certified}, {"L1", quad_json(l.l1)},
               {"L2", quad_json(l.l2)}};
  o.pass = std::labs(r.power) <= bound && dynamics::apply(m, r.word, r.reduced) == d;
  return o;
}

Output cmd_kappa_fit(const Params& p) {
  const ConeModel m = load_model(p);
  const ExactClass d = growth_direction(m, p);
  const ExactClass a = p.ample ? parse_class(m, *p.ample, "--ample") : m.ample_class();
  const auto schedule = schedule_from(p);
  std::optional<double> claim = p.claim;
  if (!claim && p.ray) claim = m.dim() / 2.0;
  const auto series = kappa::growth_series(m, d, a, schedule, p.threads.value_or(0));
  const auto fit = kappa::fit_exponent(series, claim);
  Output o;
  o.summary = {{"model_id", m.id()},
               {"D", class_label(p)},
               {"A", class_to_json(a)},
               {"schedule", schedule.describe()},
               {"l_hat", fit.l_hat},
               {"residual", fit.residual},
               {"band", {fit.ratio_min, fit.ratio_max}},
               {"band_ratio", fit.band()},
               {"drift", fit.drift},
               {"kappa_vol", fit.l_hat},
               {"kappa_sigma", fit.l_hat},
               {"kappa_sigma_note", kappa::kKappaSigmaNote}};
  o.summary["claim"] = claim ? json(*claim) : json(nullptr);
  o.pass = claim ? kappa::assess(fit).pass() : true;
  o.summary["pass"] = o.pass;
  o.files["series.csv"] = series_csv(series, claim.value_or(fit.l_hat));
  return o;
}

Output cmd_kappa_independence(const Params& p) {
  const ConeModel m = load_model(p);
  const ExactClass d = growth_direction(m, p);
  if (!p.amples) throw SchemaError("--amples", "expected ample classes 'u,v;u,v;...'");
  std::vector<ExactClass> amples;
  for (const auto& t : split(*p.amples, ';')) amples.push_back(parse_class(m, t, "--amples"));
  const auto rep = kappa::independence_check(m, d, amples, schedule_from(p), p.threads.value_or(0));
  Output o;
  json list = json::array();
  for (std::size_t i = 0; i < amples.size(); ++i) list.push_back({{"A", class_to_json(amples[i])}, {"l_hat", rep.exponents[i]}});
  o.summary = {{"model_id", m.id()}, {"D", class_label(p)}, {"fits", list}, {"max_deviation", rep.max_deviation},
               {"tolerance", kappa::kAgreementTolerance}, {"pass", rep.pass}};
  o.pass = rep.pass;
  return o;
}

Output cmd_kappa_multiples(const Params& p) {
  const ConeModel m = load_model(p);
  const ExactClass d = growth_direction(m, p);
  const ExactClass a = p.ample ? parse_class(m, *p.ample, "--ample") : m.ample_class();
  if (!p.multiples) throw SchemaError("--multiples", "expected positive integers 'k,k,...'");
  std::vector<std::int64_t> ks;
  for (const auto& t : split(*p.multiples, ',')) {
    try {
      ks.push_back(std::stoll(t));
    } catch (const std::logic_error&) {
      throw SchemaError("--multiples", "not an integer: '" + t + "'");
    }
  }
  const auto rep = kappa::multiple_check(m, d, a, ks, schedule_from(p), p.threads.value_or(0));
  Output o;
  json list = json::array();
  for (std::size_t i = 0; i < ks.size(); ++i) {
    list.push_back({{"k", ks[i]}, {"l_hat", rep.exponents[i]}, {"deviation", rep.deviations[i]}});
  }
  o.summary = {{"model_id", m.id()}, {"D", class_label(p)}, {"base_l_hat", rep.base_exponent}, {"multiples", list},
               {"tolerance", kappa::kAgreementTolerance}, {"pass", rep.pass}};
  o.pass = rep.pass;
  return o;
}

json lemma44_json(const volume::Lemma44Report& r) {
  return {{"D", class_to_json(r.d)},
          {"floor", class_to_json(r.floor)},
          {"c", quad_json(r.constants.c)},
          {"C2", quad_json(r.constants.c2)},
          {"L1_D_plus_A", quad_json(r.l1_d_plus_a)},
          {"L1_floor_plus_A", quad_json(r.l1_floor_plus_a)},
          {"lower", quad_json(r.lower)},
          {"upper", quad_json(r.upper)},
          {"floor_plus_A_movable", r.floor_plus_a_movable},
          {"pass", r.pass}};
}

Output cmd_lemma44(const Params& p) {
  const ConeModel m = load_model(p);
  Output o;
  if (p.expr) {
    if (!p.ample) throw SchemaError("--ample", "lemma44 with --expr needs --ample");
    volume::DivisorExpression expr;
    for (const auto& term : split(*p.expr, ';')) {
      const auto kv = split(term, ':');
      if (kv.size() != 2) throw SchemaError("--expr", "expected terms 'u,v:coeff' separated by ';'");
      const ExactClass c = parse_class(m, kv[0], "--expr");
      if (!c.u.rat().is_integer() || !c.v.rat().is_integer() || !c.u.is_rational() || !c.v.is_rational()) {
        throw SchemaError("--expr", "component classes must have integer coordinates");
      }
      expr.components.push_back({c.u.rat().num(), c.v.rat().num(), m.constant(parse_rational(kv[1], "--expr"))});
    }
    const auto r = volume::lemma44_check(m, expr, parse_class(m, *p.ample, "--ample"));
    o.summary = lemma44_json(r);
    o.summary["model_id"] = m.id();
    o.pass = r.pass;
    return o;
  }
  const int count = p.count.value_or(100);
  if (count <= 0) throw SchemaError("--count", "expected a positive count");
  const std::uint64_t seed = p.seed.value_or(0);
  Rng rng(seed);
  json list = json::array();
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    const auto expr = random_expression(m, rng);
    const auto a = ample_above(m, volume::floor_constants(m, expr).c2, rng);
    const auto r = volume::lemma44_check(m, expr, a);
    if (!r.pass) ++failures;
    json item = lemma44_json(r);
    item["A"] = class_to_json(a);
    list.push_back(item);
  }
  o.summary = {{"model_id", m.id()}, {"seed", seed}, {"count", count}, {"failures", failures}, {"reports", list}};
  o.pass = failures == 0;
  o.summary["pass"] = o.pass;
  return o;
}

struct HkInput {
  hk::HKModel model;
  std::optional<hk::Vec> d;
  std::optional<hk::Vec> a;
};

HkInput load_hk(const Params& p) {
  if (p.hk && p.fixture) throw SchemaError("--fixture", "give either --hk or --fixture, not both");
  if (p.fixture) {
    auto fx = hk::random_fixture(*p.fixture);
    return {fx.model, fx.d, fx.a};
  }
  if (!p.hk) throw SchemaError("--hk", "an HK model is required (--hk PATH or --fixture SEED)");
  json doc;
  try {
    doc = json::parse(read_file(*p.hk));
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("HK model file is not valid JSON: ") + e.what());
  }
  return {hk::hk_from_json(doc), std::nullopt, std::nullopt};
}

hk::Vec hk_vector(const HkInput& in, const std::optional<std::string>& text, const std::optional<hk::Vec>& fallback,
                  const char* flag) {
  if (text) return hk::vec_from_text(*text, in.model.rho(), flag);
  if (fallback) return *fallback;
  throw SchemaError(flag, std::string("missing ") + flag);
}

json vec_json(const hk::Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Output cmd_hk_q(const Params& p) {
  const HkInput in = load_hk(p);
  const hk::Vec d = hk_vector(in, p.cls, in.d, "--class");
  Output o;
  const auto cls = hk::classify(in.model, d);
  o.summary = {{"model", hk::to_json(in.model)}, {"D", vec_json(d)}, {"q", hk::q_eval(in.model, d).to_string()},
               {"classification", std::string(hk::to_string(cls))}, {"inconsistent", cls == hk::HKClass::invalid}};
  if (p.with) {
    const hk::Vec a = hk::vec_from_text(*p.with, in.model.rho(), "--with");
    o.summary["A"] = vec_json(a);
    o.summary["q_pair"] = hk::q_pair(in.model, d, a).to_string();
  }
  o.pass = cls != hk::HKClass::invalid;
  return o;
}

Output cmd_hk_vol(const Params& p) {
  const HkInput in = load_hk(p);
  const hk::Vec d = hk_vector(in, p.cls, in.d, "--class");
  const Rational v = hk::vol_hk(in.model, d);
  Output o;
  o.summary = {{"model", hk::to_json(in.model)}, {"D", vec_json(d)}, {"vol", v.to_string()}, {"vol_decimal", v.to_double()}};
  return o;
}

Output cmd_hk_kappa(const Params& p) {
  const HkInput in = load_hk(p);
  const hk::Vec d = hk_vector(in, p.cls, in.d, "--class");
  const hk::Vec a = hk_vector(in, p.ample, in.a, "--ample");
  const auto g = hk::kappa_boundary(in.model, d, a);
  Output o;
  o.summary = {{"model", hk::to_json(in.model)}, {"D", vec_json(d)}, {"A", vec_json(a)}, {"exponent", g.exponent},
               {"growth_poly", vec_json(g.poly)}, {"leading", g.poly.back().to_string()}, {"note", g.note}};
  return o;
}

Output cmd_suite_acceptance(const Params& p, std::ostream& out) {
  AcceptanceOptions opts;
  opts.seed = p.seed.value_or(0);
  opts.threads = p.threads.value_or(0);
  Artifacts artifacts;
  const auto results = run_acceptance(opts, artifacts);
  Output o;
  for (const auto& r : results) {
    out << format_line(r) << "\n";
    o.pass = o.pass && r.pass;
  }
  o.summary = manifest(results, opts);
  for (auto& [name, bytes] : artifacts) {
    if (name != "acceptance.json") o.files[name] = bytes;
  }
  return o;
}

void add_common(CLI::App* app, Params& p) {
  app->add_option("--config", p.config, "JSON config; command-line flags take precedence");
  app->add_option("--out", p.out, "Directory for JSON/CSV artifacts");
  app->add_option("--threads", p.threads, "Cap on sweep parallelism (0 = hardware)");
  app->add_option("--seed", p.seed, "Seed for randomized checks (default 0)");
}

void add_cone_model(CLI::App* app, Params& p) {
  app->add_option("--oguiso", p.oguiso, "Built-in model of dimension N >= 3");
  app->add_option("--custom", p.custom, "Model JSON file (as written by 'model build')");
}

void add_schedule(CLI::App* app, Params& p) {
  app->add_option("--ray", p.ray, "Growth direction R1 or R2");
  app->add_option("--class", p.cls, "Growth direction 'u,v'");
  app->add_option("--dyadic", p.dyadic, "Dyadic schedule m = 2^k_min .. 2^K (default 18)");
  app->add_option("--k-min", p.k_min, "First dyadic exponent (default 5)");
  app->add_option("--arithmetic", p.arithmetic, "Arithmetic schedule 'step,count'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Volume growth on movable cones of Picard-rank-two models", "birvol"};
  app.fallthrough();
  app.require_subcommand(1);
  Params p;
  add_common(&app, p);

  using Handler = std::function<Output()>;
  Handler handler;

  auto* model = app.add_subcommand("model", "Cone models")->require_subcommand(1);
  auto* build = model->add_subcommand("build", "Construct a model and print its JSON");
  add_cone_model(build, p);
  build->callback([&] { handler = [&] { return cmd_model_build(p); }; });

  auto* vol = app.add_subcommand("vol", "Volumes")->require_subcommand(1);
  auto* eval = vol->add_subcommand("eval", "Volume of a class in the closed movable cone");
  add_cone_model(eval, p);
  eval->add_option("--class", p.cls, "Class 'u,v', R1, R2 or A");
  eval->callback([&] { handler = [&] { return cmd_vol_eval(p); }; });

  auto* reduce = app.add_subcommand("reduce", "Reduce a movable class into the core chambers");
  add_cone_model(reduce, p);
  reduce->add_option("--class", p.cls, "Class 'u,v'");
  reduce->callback([&] { handler = [&] { return cmd_reduce(p); }; });

  auto* kap = app.add_subcommand("kappa", "Growth exponents")->require_subcommand(1);
  auto* fit = kap->add_subcommand("fit", "Fit the growth exponent of vol(mD + A)");
  add_cone_model(fit, p);
  add_schedule(fit, p);
  fit->add_option("--ample", p.ample, "Ample class 'u,v' (default: the model's)");
  fit->add_option("--claim", p.claim, "Claimed exponent (default n/2 along a ray)");
  fit->callback([&] { handler = [&] { return cmd_kappa_fit(p); }; });
  auto* indep = kap->add_subcommand("independence", "Compare exponents across ample classes");
  add_cone_model(indep, p);
  add_schedule(indep, p);
  indep->add_option("--amples", p.amples, "Ample classes 'u,v;u,v;...'");
  indep->callback([&] { handler = [&] { return cmd_kappa_independence(p); }; });
  auto* mult = kap->add_subcommand("multiples", "Compare exponents of kD with D");
  add_cone_model(mult, p);
  add_schedule(mult, p);
  mult->add_option("--ample", p.ample, "Ample class 'u,v'");
  mult->add_option("--multiples", p.multiples, "Positive integers 'k,k,...'");
  mult->callback([&] { handler = [&] { return cmd_kappa_multiples(p); }; });

  auto* l44 = app.add_subcommand("lemma44", "Floor perturbation bounds on L1");
  add_cone_model(l44, p);
  l44->add_option("--expr", p.expr, "Components 'u,v:coeff;...'");
  l44->add_option("--ample", p.ample, "Ample class 'u,v'");
  l44->add_option("--count", p.count, "Random expressions to check (default 100)");
  l44->callback([&] { handler = [&] { return cmd_lemma44(p); }; });

  auto* hkc = app.add_subcommand("hk", "Hyperkahler lattice computations")->require_subcommand(1);
  auto add_hk = [&](CLI::App* c) {
    c->add_option("--hk", p.hk, "HK model JSON {rho, gram, c_X, d}");
    c->add_option("--fixture", p.fixture, "Use the random HK fixture with this seed");
    c->add_option("--class", p.cls, "Class as comma-separated rationals");
  };
  auto* hq = hkc->add_subcommand("q", "Quadratic form and classification");
  add_hk(hq);
  hq->add_option("--with", p.with, "Second class for the bilinear form");
  hq->callback([&] { handler = [&] { return cmd_hk_q(p); }; });
  auto* hv = hkc->add_subcommand("vol", "Volume c_X q(D)^d");
  add_hk(hv);
  hv->callback([&] { handler = [&] { return cmd_hk_vol(p); }; });
  auto* hkk = hkc->add_subcommand("kappa", "Exact growth of vol(mD + A) for boundary D");
  add_hk(hkk);
  hkk->add_option("--ample", p.ample, "Ample class");
  hkk->callback([&] { handler = [&] { return cmd_hk_kappa(p); }; });

  auto* suite = app.add_subcommand("suite", "Reproducibility harness")->require_subcommand(1);
  auto* acc = suite->add_subcommand("acceptance", "Run the acceptance criteria");
  acc->callback([&] { handler = [&] { return cmd_suite_acceptance(p, out); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kSchema;
  }

  try {
    merge_config(p);
    Output o = handler();
    const std::string summary = dump_json(o.summary);
    if (acc->parsed()) {
      // The acceptance lines already went to `out`.
    } else {
      out << summary;
    }
    if (p.out) {
      const std::filesystem::path dir(*p.out);
      write_atomic(dir / (acc->parsed() ? "acceptance.json" : "summary.json"), summary);
      for (const auto& [name, bytes] : o.files) write_atomic(dir / name, bytes);
    }
    return o.pass ? kOk : kCheckFailed;
  } catch (const SchemaError& e) {
    err << "schema error at " << (e.path().empty() ? "$" : e.path()) << ": " << e.detail() << "\n";
    return kSchema;
  } catch (const Error& e) {
    err << "math error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kMath;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "io error: " << e.what() << "\n";
    return kSchema;
  }
}

}  // namespace birvol::cli
