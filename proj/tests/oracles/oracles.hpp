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

#ifndef BIRVOL_TESTS_ORACLES_HPP_
#define BIRVOL_TESTS_ORACLES_HPP_

// Independent reference computations used only by the tests. None of these
// call into the library's arithmetic.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

// SplitMix64.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::uint64_t s_;
};

// H1^j H2^(n-j) on the complete intersection of n-1 (1,1) and one (2,2)
// divisors in P^n x P^n: the coefficient of x^n y^n in 2 (x+y)^n x^j y^(n-j),
// counted by enumerating the 2^n ways to pick x or y from each linear factor.
inline std::vector<long> intersections_by_enumeration(int n) {
  std::vector<long> out(static_cast<std::size_t>(n + 1), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int xs = __builtin_popcountll(mask);
    // Picks x^xs y^(n-xs); multiplying by x^j y^(n-j) reaches x^n y^n iff j = n - xs.
    out[static_cast<std::size_t>(n - xs)] += 2;
  }
  return out;
}

// (u H1 + v H2)^n by expanding all 2^n factor choices.
inline long double volume_by_enumeration(const std::vector<long>& inters, long double u, long double v) {
  const int n = static_cast<int>(inters.size()) - 1;
  long double acc = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int j = __builtin_popcountll(mask);
    acc += std::pow(u, j) * std::pow(v, n - j) * static_cast<long double>(inters[static_cast<std::size_t>(j)]);
  }
  return acc;
}

struct Rays {
  long double lambda;
  long double r1u, r1v, r2u, r2v;
};

// Eigen-rays of [[a,b],[c,d]] (det 1, trace > 2) in long double, normalized
// to coordinate sum 1.
inline Rays rays_long_double(long a, long b, long c, long d) {
  const long double t = static_cast<long double>(a + d);
  const long double lam = (t + std::sqrt(t * t - 4.0L)) / 2.0L;
  const long double mu = 1.0L / lam;
  Rays r{};
  r.lambda = lam;
  long double u1 = static_cast<long double>(b);
  long double v1 = lam - static_cast<long double>(a);
  long double u2 = static_cast<long double>(b);
  long double v2 = mu - static_cast<long double>(a);
  (void)c;
  r.r1u = u1 / (u1 + v1);
  r.r1v = v1 / (u1 + v1);
  r.r2u = u2 / (u2 + v2);
  r.r2v = v2 / (u2 + v2);
  return r;
}

// Cramer's rule for D = a1 R1 + a2 R2.
inline std::pair<long double, long double> solve_eigen(const Rays& r, long double u, long double v) {
  const long double det = r.r1u * r.r2v - r.r2u * r.r1v;
  return {(u * r.r2v - r.r2u * v) / det, (r.r1u * v - u * r.r1v) / det};
}

}  // namespace oracle

#endif  // BIRVOL_TESTS_ORACLES_HPP_
