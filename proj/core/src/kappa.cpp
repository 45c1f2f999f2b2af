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

#include "birvol/kappa.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "birvol/dynamics.hpp"
#include "birvol/errors.hpp"
#include "birvol/volume.hpp"

namespace birvol::kappa {

Schedule Schedule::dyadic(int k_max, int k_min) {
  if (k_min < 0 || k_max < k_min || k_max > 62) {
    throw SchemaError("$.schedule", "dyadic schedule needs 0 <= k_min <= k_max <= 62");
  }
  Schedule s;
  s.kind = Kind::dyadic;
  s.k_min = k_min;
  s.k_max = k_max;
  return s;
}

Schedule Schedule::arithmetic(std::int64_t step, std::int64_t count) {
  if (step <= 0 || count <= 0) throw SchemaError("$.schedule", "arithmetic schedule needs positive step and count");
  Schedule s;
  s.kind = Kind::arithmetic;
  s.step = step;
  s.count = count;
  return s;
}

std::vector<std::int64_t> Schedule::values() const {
  std::vector<std::int64_t> out;
  if (kind == Kind::dyadic) {
    for (int k = k_min; k <= k_max; ++k) out.push_back(std::int64_t{1} << k);
  } else {
    for (std::int64_t i = 1; i <= count; ++i) out.push_back(step * i);
  }
  return out;
}

std::string Schedule::describe() const {
  if (kind == Kind::dyadic) return "dyadic 2^" + std::to_string(k_min) + "..2^" + std::to_string(k_max);
  return "arithmetic step " + std::to_string(step) + " count " + std::to_string(count);
}

GrowthSeries growth_series(const ConeModel& model, const ExactClass& d, const ExactClass& a,
                           const Schedule& schedule, unsigned threads) {
  GrowthSeries series;
  series.model_id = model.id();
  series.d = d;
  series.a = a;
  series.schedule = schedule;
  const std::vector<std::int64_t> ms = schedule.values();
  series.entries.resize(ms.size());
  std::vector<std::exception_ptr> errors(ms.size());

  auto work = [&](std::size_t i) {
    try {
      const Rational m{BigInt(std::to_string(ms[i]))};
      const ExactClass x{d.u * m + a.u, d.v * m + a.v};
      const auto mv = volume::vol_movable_detail(model, x);
      const auto l = dynamics::l_coords(model, x);
      const auto r = dynamics::eigen_coords(model, mv.reduction.reduced);
      SeriesEntry& e = series.entries[i];
      e.m = ms[i];
      e.vol_exact = mv.vol;
      e.vol = mv.vol.to_double();
      e.log_vol = mv.vol.is_zero() ? -INFINITY : mv.vol.log_abs();
      e.l1 = l.l1.to_double();
      e.l2_reduced = std::exp(r.a1.log_abs() - r.a2.log_abs());
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  unsigned n = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  n = static_cast<unsigned>(std::min<std::size_t>(n, ms.size()));
  if (n <= 1) {
    for (std::size_t i = 0; i < ms.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < ms.size(); i = next++) work(i);
      });
    }
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return series;
}

ExponentFit fit_exponent(const std::vector<std::int64_t>& m, const std::vector<double>& log_vol,
                         std::optional<double> claim) {
  if (m.size() != log_vol.size()) throw MathError(ErrorCode::degenerate_series, "m and vol lengths differ");
  if (m.size() < 8) {
    throw MathError(ErrorCode::degenerate_series, "series has " + std::to_string(m.size()) + " entries; at least 8 needed");
  }
  if (static_cast<double>(m.back()) < 1000.0 * static_cast<double>(m.front())) {
    throw MathError(ErrorCode::degenerate_series, "series spans less than 3 decades in m");
  }
  for (double lv : log_vol) {
    if (!std::isfinite(lv)) throw MathError(ErrorCode::degenerate_series, "series contains a zero volume");
  }
  if (std::all_of(log_vol.begin(), log_vol.end(), [&](double lv) { return lv == log_vol.front(); })) {
    throw MathError(ErrorCode::degenerate_series, "series is constant");
  }

  ExponentFit fit;
  const std::size_t start = m.size() / 2;
  const std::size_t k = m.size() - start;
  double sx = 0;
  double sy = 0;
  for (std::size_t i = start; i < m.size(); ++i) {
    sx += std::log(static_cast<double>(m[i]));
    sy += log_vol[i];
  }
  const double mx = sx / static_cast<double>(k);
  const double my = sy / static_cast<double>(k);
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = start; i < m.size(); ++i) {
    const double dx = std::log(static_cast<double>(m[i])) - mx;
    sxx += dx * dx;
    sxy += dx * (log_vol[i] - my);
  }
  fit.l_hat = sxy / sxx;
  double ss = 0;
  for (std::size_t i = start; i < m.size(); ++i) {
    const double r = log_vol[i] - (my + fit.l_hat * (std::log(static_cast<double>(m[i])) - mx));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(k));
  fit.fit_points = k;

  const double e = claim.value_or(fit.l_hat);
  fit.claim = claim;
  std::vector<double> ratios;
  for (std::size_t i = 0; i < m.size(); ++i) ratios.push_back(std::exp(log_vol[i] - e * std::log(static_cast<double>(m[i]))));
  fit.ratio_min = *std::min_element(ratios.begin(), ratios.end());
  fit.ratio_max = *std::max_element(ratios.begin(), ratios.end());
  const std::size_t half = ratios.size() / 2;
  const auto [lo1, hi1] = std::minmax_element(ratios.begin(), ratios.begin() + static_cast<std::ptrdiff_t>(half));
  const auto [lo2, hi2] = std::minmax_element(ratios.begin() + static_cast<std::ptrdiff_t>(half), ratios.end());
  fit.drift = *lo2 > *hi1 || *hi2 < *lo1;
  return fit;
}

ExponentFit fit_exponent(const GrowthSeries& series, std::optional<double> claim) {
  std::vector<std::int64_t> m;
  std::vector<double> lv;
  for (const auto& e : series.entries) {
    m.push_back(e.m);
    lv.push_back(e.log_vol);
  }
  return fit_exponent(m, lv, claim);
}

Assessment assess(const ExponentFit& fit, double slope_tol, double band_limit) {
  Assessment a;
  const double claim = fit.claim.value_or(fit.l_hat);
  a.slope_ok = std::abs(fit.l_hat - claim) <= slope_tol;
  a.band_ok = fit.ratio_min > 0 && fit.band() < band_limit;
  a.drift_ok = !fit.drift;
  return a;
}

IndependenceReport independence_check(const ConeModel& model, const ExactClass& d, const std::vector<ExactClass>& amples,
                                      const Schedule& schedule, unsigned threads, double tol) {
  IndependenceReport r;
  r.amples = amples;
  for (const auto& a : amples) r.exponents.push_back(fit_exponent(growth_series(model, d, a, schedule, threads)).l_hat);
  for (std::size_t i = 0; i < r.exponents.size(); ++i) {
    for (std::size_t j = i + 1; j < r.exponents.size(); ++j) {
      r.max_deviation = std::max(r.max_deviation, std::abs(r.exponents[i] - r.exponents[j]));
    }
  }
  r.pass = r.max_deviation < tol;
  return r;
}

MultipleReport multiple_check(const ConeModel& model, const ExactClass& d, const ExactClass& a,
                              const std::vector<std::int64_t>& k_list, const Schedule& schedule, unsigned threads,
                              double tol) {
  MultipleReport r;
  r.base_exponent = fit_exponent(growth_series(model, d, a, schedule, threads)).l_hat;
  r.pass = true;
  for (std::int64_t k : k_list) {
    if (k <= 0) throw MathError(ErrorCode::hypothesis_violation, "multiples must be positive integers");
    const Rational kr{BigInt(std::to_string(k))};
    const ExactClass kd{d.u * kr, d.v * kr};
    const double l = fit_exponent(growth_series(model, kd, a, schedule, threads)).l_hat;
    r.k.push_back(k);
    r.exponents.push_back(l);
    r.deviations.push_back(std::abs(l - r.base_exponent));
    if (!(r.deviations.back() < tol)) r.pass = false;
  }
  return r;
}

}  // namespace birvol::kappa
