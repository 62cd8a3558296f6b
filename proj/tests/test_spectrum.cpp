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

#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "spectrum.hpp"

using namespace hgm;

namespace {
Hypergraph random_graph(int n, std::mt19937_64& rng) {
  std::vector<Mask> edges;
  std::uniform_real_distribution<double> u(0, 1);
  for (int c = 1; c <= n; ++c)
    for (Mask e : c_subsets(n, c))
      if (u(rng) < 0.3) edges.push_back(e);
  return build(n, edges);
}
}  // namespace

TEST_CASE("fwht matches the definition") {
  std::vector<std::int32_t> v{3, -1, 4, 1, -5, 9, 2, -6};
  auto w = v;
  fwht(w.data(), 3);
  for (int k = 0; k < 8; ++k) {
    int s = 0;
    for (int j = 0; j < 8; ++j) s += (popcount(j & k) & 1 ? -1 : 1) * v[j];
    CHECK(w[k] == s);
  }
}

TEST_CASE("single components") {
  auto plus = from_hypergraph(build(3, {}));
  CHECK(component_direct(plus, {0, 0}) == 1);
  for (Mask x = 0; x < 8; ++x) {
    CHECK(component_direct(plus, {x, 0}) == 1);
    for (Mask z = 1; z < 8; ++z) CHECK(component_direct(plus, {x, z}) == 0);
  }
  auto ccz = build(3, {0b111});
  CHECK(component_direct(from_hypergraph(ccz), {0b001, 0}) == Rational(1, 2));
  CHECK(component_induced(ccz, {0b001, 0}) == Rational(1, 4));
  CHECK(component_induced(ccz, {0, 0}) == 1);
}

TEST_CASE("both component routes agree exhaustively") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 2 + rep % 4;
    auto g = random_graph(n, rng);
    auto st = from_hypergraph(g);
    auto sp = full_spectrum(st);
    for (Mask x = 0; x < (Mask{1} << n); ++x)
      for (Mask z = 0; z < (Mask{1} << n); ++z) {
        auto d = component_direct(st, {x, z});
        REQUIRE(d * d == component_induced(g, {x, z}));
        REQUIRE(sp.sq_component(x, z) == d * d);
      }
  }
}

TEST_CASE("star variant permutes each spectrum row") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 30; ++rep) {
    int n = 2 + rep % 4;
    auto g = random_graph(n, rng);
    auto sp = full_spectrum(from_hypergraph(g));
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
      std::vector<std::int64_t> star, direct;
      for (Mask z = 0; z < (Mask{1} << n); ++z) {
        star.push_back(std::abs(phase_trace(induced_star(g, {x, z}))));
        direct.push_back(std::abs(sp.raw(x, z)));
      }
      std::sort(star.begin(), star.end());
      std::sort(direct.begin(), direct.end());
      REQUIRE(star == direct);
    }
  }
}

TEST_CASE("spectra sum to one") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 9; ++n) {
    auto sp = full_spectrum(from_hypergraph(random_graph(n, rng)));
    BigInt total = 0;
    for (auto w : sp.raw_table()) total += BigInt(w) * w;
    CHECK(total == BigInt(1) << (3 * n));
  }
}

TEST_CASE("stabilizer states have indicator spectra") {
  auto sp = full_spectrum(from_hypergraph(builtin("triangle")));
  int ones = 0;
  for (auto w : sp.raw_table()) {
    CHECK((w == 0 || std::abs(w) == 8));
    ones += w != 0;
  }
  CHECK(ones == 8);
}

TEST_CASE("power sums") {
  auto ps = spectrum_power_sums(from_hypergraph(build(3, {0b111})), {2.0, 0.5, 1.3});
  CHECK(ps[0].exact);
  // m2 = sum |W|^4 / 2^{5n} = 11/32
  CHECK(ps[0].int_sum * 32 == BigInt(11) << 15);
  CHECK(ps[1].int_sum * 8 == BigInt(15) << 6);
  CHECK_FALSE(ps[2].exact);
  auto star = star_power_sums(build(3, {0b111}), {2.0, 1.3});
  CHECK(star[0].int_sum == ps[0].int_sum);
  CHECK(static_cast<double>(star[1].real_sum) == doctest::Approx(static_cast<double>(ps[2].real_sum)).epsilon(1e-14));
}

TEST_CASE("results do not depend on the worker count") {
  std::mt19937_64 rng(9);
  auto st = from_hypergraph(random_graph(10, rng));
  set_jobs(1);
  auto a = spectrum_power_sums(st, {2.0, 0.7});
  set_jobs(4);
  auto b = spectrum_power_sums(st, {2.0, 0.7});
  set_jobs(0);
  CHECK(a[0].int_sum == b[0].int_sum);
  CHECK(a[1].real_sum == b[1].real_sum);
}

TEST_CASE("spectrum csv") {
  std::ostringstream out;
  write_spectrum_csv(full_spectrum(from_hypergraph(build(1, {}))), out);
  CHECK(out.str() == "# n=1 denominator=4^1=4\nx,z,sq_component_numerator\n0,0,4\n0,1,0\n1,0,4\n1,1,0\n");
}

TEST_CASE("spectrum table size limit") {
  CHECK_THROWS_AS(full_spectrum(from_hypergraph(build(kSpectrumTableMaxN + 1, {}))), Error);
}
