// Copyright 2026 The hgmagic Authors
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


#include "ensembles.hpp"

#include <cmath>
#include <random>

namespace hgm {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

void validate(const EnsembleSpec& spec) {
  require(spec.c >= 3, "edge cardinality c must be >= 3");
  require(spec.c <= spec.n, "edge cardinality c must not exceed n");
  require(spec.n <= 63, "sampled hypergraphs need n <= 63");
  require(spec.p >= 0 && spec.p <= 1, "edge probability p must lie in [0, 1]");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Sum of |W|^{2 alpha} over the direct spectrum, exact.
BigInt exact_power_sum(const PhaseState& st, int alpha) {
  return spectrum_power_sums(st, {static_cast<double>(alpha)})[0].int_sum;
}

}  // namespace

Hypergraph sample(const EnsembleSpec& spec, std::uint64_t index) {
  validate(spec);
  std::mt19937_64 rng(splitmix64(splitmix64(spec.seed) ^ index));
  std::vector<Mask> edges;
  for (Mask e : c_subsets(spec.n, spec.c)) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < spec.p) edges.push_back(e);
  }
  return build(spec.n, std::move(edges));
}

MomentEstimate monte_carlo_moment(const EnsembleSpec& spec, double alpha, std::uint64_t samples) {
  validate(spec);
  require(samples >= 2, "Monte Carlo needs at least 2 samples");
  check_budget(spec.n, "Monte Carlo moment");
  std::vector<long double> vals(samples);
  parallel_for(samples, [&](std::uint64_t i) { vals[i] = magic_direct(from_hypergraph(sample(spec, i)), {alpha})[0].pl_moment; });
  // Welford, in sample order so the result does not depend on scheduling.
  long double mean = 0, m2 = 0;
  std::uint64_t k = 0;
  for (long double v : vals) {
    ++k;
    long double d = v - mean;
    mean += d / k;
    m2 += d * (v - mean);
  }
  MomentEstimate est;
  est.mean = static_cast<double>(mean);
  est.stderr_ = static_cast<double>(std::sqrt(m2 / (k - 1)) / std::sqrt(static_cast<long double>(k)));
  est.samples = samples;
  est.alpha = alpha;
  return est;
}

std::vector<Rational> exact_raw_moments(int c, const Rational& p, int n, int alpha, int max_tau) {
  require(c >= 1 && c <= n, "edge cardinality must satisfy 1 <= c <= n");
  require(p >= 0 && p <= 1, "edge probability p must lie in [0, 1]");
  require(alpha >= 1, "exact averages need an integer alpha >= 1");
  require(max_tau >= 1, "moment order must be >= 1");
  check_budget(n, "exact average");
  std::vector<Mask> pool = c_subsets(n, c);
  int m = static_cast<int>(pool.size());
  if (m > 22)
    fail(ErrorKind::Budget, "exact enumeration needs C(n,c) <= 22, got " + std::to_string(m));
  std::uint64_t total = std::uint64_t{1} << m;
  std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
  std::uint64_t per = total / chunks;
  // acc[chunk][tau][k] = sum over graphs with k edges of (power sum)^tau
  std::vector<std::vector<std::vector<BigInt>>> acc(
      chunks, std::vector<std::vector<BigInt>>(max_tau, std::vector<BigInt>(m + 1, 0)));
  parallel_for(chunks, [&](std::uint64_t ch) {
    for (std::uint64_t b = ch * per; b < (ch + 1) * per; ++b) {
      std::vector<Mask> edges;
      for (int i = 0; i < m; ++i)
        if (b >> i & 1) edges.push_back(pool[i]);
      BigInt s = exact_power_sum(from_hypergraph(build(n, edges)), alpha);
      BigInt pw = s;
      int k = popcount(b);
      for (int t = 0; t < max_tau; ++t) {
        acc[ch][t][k] += pw;
        pw *= s;
      }
    }
  });
  std::vector<Rational> out;
  for (int t = 0; t < max_tau; ++t) {
    Rational sum = 0;
    for (int k = 0; k <= m; ++k) {
      BigInt tot = 0;
      for (std::uint64_t ch = 0; ch < chunks; ++ch) tot += acc[ch][t][k];
      if (tot == 0) continue;
      Rational w = 1;
      for (int i = 0; i < k; ++i) w *= p;
      for (int i = k; i < m; ++i) w *= (1 - p);
      sum += w * Rational(tot);
    }
    out.push_back(sum / Rational(BigInt(1) << ((t + 1) * n * (1 + 2 * alpha))));
  }
  return out;
}

Rational exact_average(int c, const Rational& p, int n, int alpha) {
  return exact_raw_moments(c, p, n, alpha, 1)[0];
}

Rational closed_m2_uniform(int n) {
  require(n >= 3, "closed form needs n >= 3");
  BigInt two_n = BigInt(1) << n;
  return Rational(7) / two_n - Rational(14) / (two_n * two_n) + Rational(8) / (two_n * two_n * two_n);
}

long double bound_general(int c, int alpha, int n) {
  require(c >= 3, "bound needs c >= 3");
  require(alpha >= 2, "bound needs integer alpha >= 2");
  require(alpha <= 6, "alpha too large for a finite double exponent");
  return std::exp2(static_cast<long double>(c) + std::exp2(2.0L * alpha - 1) - n);
}

long double sre_lower_bound_general(int c, int alpha, int n) {
  require(c >= 3 && alpha >= 2 && alpha <= 6, "needs c >= 3 and 2 <= alpha <= 6");
  return (n - (c + std::exp2(2.0L * alpha - 1))) / (alpha - 1.0L);
}

Rational bound_e3_alpha(int alpha, int n) {
  require(alpha >= 3, "this bound holds for alpha >= 3");
  require(n >= 1, "n must be positive");
  BigInt dfact = 1;
  for (int k = 2 * alpha - 1; k > 1; k -= 2) dfact *= k;
  return Rational(4) / (BigInt(1) << n) + Rational(dfact) / (BigInt(1) << ((alpha - 1) * n));
}

Rational variance_bound(int n) {
  require(n >= 3, "variance bound needs n >= 3");
  return Rational(60) / (BigInt(1) << (3 * n));
}

ConcentrationResult concentration_check(int n, std::uint64_t samples, std::uint64_t seed) {
  require(n >= 3, "concentration check needs n >= 3");
  require(samples >= 1, "need at least one sample");
  check_budget(n, "concentration check");
  EnsembleSpec spec{3, 0.5, n, seed};
  std::vector<BigInt> sums(samples);
  parallel_for(samples, [&](std::uint64_t i) { sums[i] = exact_power_sum(from_hypergraph(sample(spec, i)), 2); });
  // M2 >= n - 3  <=>  sum |W|^4 <= 2^{5n} * 2^{-(n-3)}
  BigInt threshold = BigInt(1) << (4 * n + 3);
  ConcentrationResult r;
  r.samples = samples;
  r.min_sre = INFINITY;
  for (const auto& s : sums) {
    if (s <= threshold) ++r.above;
    long double m2 = log2_rational(Rational(s, BigInt(1) << (5 * n)));
    r.min_sre = std::min<double>(r.min_sre, static_cast<double>(-m2));
  }
  r.fraction = static_cast<double>(r.above) / static_cast<double>(samples);
  r.floor = 1.0 - 60.0 / std::ldexp(1.0, n);
  return r;
}

}  // namespace hgm
