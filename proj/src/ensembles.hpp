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


#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magic.hpp"

namespace hgm {

struct EnsembleSpec {
  int c = 3;
  double p = 0.5;
  int n = 3;
  std::uint64_t seed = 0;
};

struct MomentEstimate {
  double mean = 0;
  double stderr_ = 0;
  std::uint64_t samples = 0;
  double alpha = 0;
};

void validate(const EnsembleSpec& spec);
Hypergraph sample(const EnsembleSpec& spec, std::uint64_t index);
MomentEstimate monte_carlo_moment(const EnsembleSpec& spec, double alpha, std::uint64_t samples);

// Weighted enumeration over all 2^{C(n,c)} c-uniform hypergraphs.
Rational exact_average(int c, const Rational& p, int n, int alpha);
// Raw moments E[m_alpha^tau] for tau = 1..max_tau, same enumeration.
std::vector<Rational> exact_raw_moments(int c, const Rational& p, int n, int alpha, int max_tau);

Rational closed_m2_uniform(int n);
long double bound_general(int c, int alpha, int n);
Rational bound_e3_alpha(int alpha, int n);
long double sre_lower_bound_general(int c, int alpha, int n);
Rational variance_bound(int n);

// Counting problems; results are exact.
BigInt counting_N(int c, int alpha, int n);
BigInt counting_N_rank(int alpha, int n);  // c = 3 only, via GF(2) rank per T
BigInt counting_N_tau(int c, int alpha, int n, int tau);
BigInt counting_N_tau_literal(int c, int alpha, int n, int tau);

struct ConcentrationResult {
  double fraction = 0;
  double floor = 0;
  std::uint64_t above = 0;
  std::uint64_t samples = 0;
  double min_sre = 0;
};
ConcentrationResult concentration_check(int n, std::uint64_t samples, std::uint64_t seed);

// Composition sums over kappa = (k0+, k0-, k1+, k1-, k2+, k2-, k3+, k3-).
using Kappa = std::array<int, 8>;
std::int64_t f_kappa(const Kappa& k);
// Counts sign-flipping 3-edges directly over explicitly labeled vertices.
std::int64_t f_kappa_triples(const Kappa& k);

enum class CompositionRoute { Auto, Identity, Literal, Reduced, Plane, ZeroSupport };
const char* route_name(CompositionRoute r);

struct AvgM2 {
  long double value = 0;       // may underflow to 0 for large n; see log2_value
  long double log2_value = 0;  // log2 |value|
  int sign = 1;
  CompositionRoute route = CompositionRoute::Auto;
};

AvgM2 avg_m2_p(int n, double p, CompositionRoute route = CompositionRoute::Auto);
Rational avg_m2_p_exact(int n, const Rational& p);  // literal enumeration, small n

struct EdgeBudget {
  double p = 0;
  double expected_edges = 0;
  double target = 0;    // -log2 <m2> aimed for
  double achieved = 0;  // -log2 <m2> at p
  int evaluations = 0;
  CompositionRoute route = CompositionRoute::Auto;
};

// Solves -log2 avg_m2_p(n, p) = gamma * (-log2 avg_m2_p(n, 1/2)) on (0, 1/2].
EdgeBudget solve_edge_budget(int n, double gamma);

BigInt binomial(int n, int k);

}  // namespace hgm
