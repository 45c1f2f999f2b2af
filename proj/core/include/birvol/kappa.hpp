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

#ifndef BIRVOL_KAPPA_HPP_
#define BIRVOL_KAPPA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "birvol/exactnum.hpp"
#include "birvol/lattice_model.hpp"

namespace birvol::kappa {

struct Schedule {
  enum class Kind { dyadic, arithmetic };
  Kind kind = Kind::dyadic;
  int k_min = 5;  // dyadic: m = 2^k_min, ..., 2^k_max
  int k_max = 18;
  std::int64_t step = 1;  // arithmetic: m = step * i, i = 1..count
  std::int64_t count = 0;

  static Schedule dyadic(int k_max, int k_min = 5);
  static Schedule arithmetic(std::int64_t step, std::int64_t count);

  std::vector<std::int64_t> values() const;
  std::string describe() const;
};

struct SeriesEntry {
  std::int64_t m = 0;
  QuadExt vol_exact;
  double vol = 0;
  double log_vol = 0;
  double l1 = 0;
  double l2_reduced = 0;
};

struct GrowthSeries {
  std::string model_id;
  ExactClass d;
  ExactClass a;
  Schedule schedule;
  std::vector<SeriesEntry> entries;
};

// Exact vol(mD + A) along the schedule. threads == 0 uses the hardware
// concurrency; the entry order never depends on it.
GrowthSeries growth_series(const ConeModel& model, const ExactClass& d, const ExactClass& a,
                           const Schedule& schedule, unsigned threads = 0);

struct ExponentFit {
  double l_hat = 0;
  double residual = 0;  // RMS of the log-log fit
  std::optional<double> claim;
  double ratio_min = 0;  // of vol / m^claim over the whole series
  double ratio_max = 0;
  bool drift = false;    // second-half ratios disjoint from the first half
  std::size_t fit_points = 0;

  double band() const { return ratio_max / ratio_min; }
};

ExponentFit fit_exponent(const std::vector<std::int64_t>& m, const std::vector<double>& log_vol,
                         std::optional<double> claim = std::nullopt);
ExponentFit fit_exponent(const GrowthSeries& series, std::optional<double> claim = std::nullopt);

inline constexpr double kSlopeTolerance = 0.05;
inline constexpr double kBandLimit = 1e3;
inline constexpr double kAgreementTolerance = 0.02;

struct Assessment {
  bool slope_ok = false;
  bool band_ok = false;
  bool drift_ok = false;
  bool pass() const { return slope_ok && band_ok && drift_ok; }
};

Assessment assess(const ExponentFit& fit, double slope_tol = kSlopeTolerance, double band_limit = kBandLimit);

struct IndependenceReport {
  std::vector<ExactClass> amples;
  std::vector<double> exponents;
  double max_deviation = 0;
  bool pass = false;
};

IndependenceReport independence_check(const ConeModel& model, const ExactClass& d, const std::vector<ExactClass>& amples,
                                       const Schedule& schedule, unsigned threads = 0,
                                       double tol = kAgreementTolerance);

struct MultipleReport {
  double base_exponent = 0;
  std::vector<std::int64_t> k;
  std::vector<double> exponents;
  std::vector<double> deviations;
  bool pass = false;
};

MultipleReport multiple_check(const ConeModel& model, const ExactClass& d, const ExactClass& a,
                              const std::vector<std::int64_t>& k_list, const Schedule& schedule, unsigned threads = 0,
                              double tol = kAgreementTolerance);

// The section-count exponent equals the volume exponent under a uniform
// Cartier index bound; it is reported, never measured.
inline constexpr const char* kKappaSigmaNote = "by theorem, not computed";

}  // namespace birvol::kappa

#endif  // BIRVOL_KAPPA_HPP_
