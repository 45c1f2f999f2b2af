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

#include <benchmark/benchmark.h>

#include "birvol/dynamics.hpp"
#include "birvol/kappa.hpp"
#include "birvol/lattice_model.hpp"
#include "birvol/volume.hpp"

namespace {

using namespace birvol;

void BM_QuadMultiply(benchmark::State& state) {
  const QuadExt a(Rational(17), Rational(12), 2);
  QuadExt x(Rational(1), Rational(0), 2);
  for (auto _ : state) {
    x = x * a;
    benchmark::DoNotOptimize(x);
    if (state.iterations() % 64 == 0) x = QuadExt(Rational(1), Rational(0), 2);
  }
}
BENCHMARK(BM_QuadMultiply);

void BM_ReduceToCore(benchmark::State& state) {
  const ConeModel m = build_oguiso(3);
  const IntMat2 f = dynamics::word_matrix(m, dynamics::parse_word("f f f f"));
  const ExactClass x = f * m.ample_class();
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::reduce_to_core(m, x));
}
BENCHMARK(BM_ReduceToCore);

void BM_VolMovable(benchmark::State& state) {
  const ConeModel m = build_oguiso(static_cast<int>(state.range(0)));
  const ExactClass a = m.ample_class();
  const ExactClass x{m.r1().u + a.u, m.r1().v + a.v};
  for (auto _ : state) benchmark::DoNotOptimize(volume::vol_movable(m, x));
}
BENCHMARK(BM_VolMovable)->DenseRange(3, 6);

void BM_GrowthSeries(benchmark::State& state) {
  const ConeModel m = build_oguiso(4);
  const auto schedule = kappa::Schedule::dyadic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kappa::growth_series(m, m.r1(), m.ample_class(), schedule, 1));
}
BENCHMARK(BM_GrowthSeries)->Arg(12)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
