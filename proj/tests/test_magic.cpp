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

#include <cmath>
#include <random>

#include "doctest.h"
#include "magic.hpp"

using namespace hgm;

namespace {
Hypergraph random_uniform(int n, int c, std::mt19937_64& rng) {
  std::vector<Mask> edges;
  for (Mask e : c_subsets(n, c))
    if (rng() & 1) edges.push_back(e);
  return build(n, edges);
}
}  // namespace

TEST_CASE("stabilizer states have unit moments and zero magic") {
  for (const char* name : {"empty:5", "triangle"}) {
    auto st = from_hypergraph(builtin(name));
    for (const auto& r : magic_direct(st, {0.5, 2.0, 3.0})) {
      REQUIRE(r.exact_moment);
      CHECK(*r.exact_moment == 1);
      CHECK(r.sre == 0);
    }
  }
}

TEST_CASE("CCZ moments") {
  auto g = builtin("ccz");
  auto r = magic_direct(from_hypergraph(g), {2.0, 0.5});
  CHECK(*r[0].exact_moment == Rational(11, 32));
  CHECK(static_cast<double>(r[0].sre) == doctest::Approx(std::log2(32.0 / 11.0)).epsilon(1e-14));
  CHECK(*r[1].exact_moment == Rational(15, 8));
  CHECK(static_cast<double>(r[1].sre) == doctest::Approx(2 * std::log2(15.0 / 8.0)).epsilon(1e-14));
  auto s = magic_star(g, {2.0, 0.5});
  CHECK(*s[0].exact_moment == Rational(11, 32));
  CHECK(*s[1].exact_moment == Rational(15, 8));
  CHECK(s[0].method == Method::StarTrace);
}

TEST_CASE("order one is rejected") {
  CHECK_THROWS_AS(magic_direct(from_hypergraph(builtin("ccz")), {1.0}), Error);
  CHECK_THROWS_AS(magic_star(builtin("ccz"), {1.0}), Error);
}

TEST_CASE("degree bound") {
  CHECK(static_cast<double>(degree_bound(builtin("ccz"), 2)) == doctest::Approx(3 * (1 - std::log2(65.0 / 64.0))));
  CHECK(degree_bound(builtin("empty:4"), 2) == 0);
  CHECK_THROWS_AS(degree_bound(builtin("ccz"), 1.5), Error);

  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 4 + rep % 7;
    auto g = random_uniform(n, 3, rng);
    auto r = magic_direct(from_hypergraph(g), {2.0, 3.0});
    for (const auto& m : r) {
      CHECK(m.sre <= degree_bound(g, m.alpha) + 1e-12);
      CHECK(m.sre <= n / (m.alpha - 1) + 1e-12);
    }
  }
}

TEST_CASE("Renyi orders are monotone") {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 3 + rep % 6;
    auto r = magic_direct(from_hypergraph(random_uniform(n, 3, rng)), {0.5, 2.0, 3.0, 1.5});
    CHECK(r[0].sre + 1e-10 >= r[3].sre);
    CHECK(r[3].sre + 1e-10 >= r[1].sre);
    CHECK(r[1].sre + 1e-10 >= r[2].sre);
  }
}

TEST_CASE("robustness lower bound") {
  CHECK(robustness_lower_bound(from_hypergraph(builtin("empty:3"))) == 0);
  CHECK(static_cast<double>(robustness_lower_bound(from_hypergraph(builtin("ccz")))) ==
        doctest::Approx(std::log2(15.0 / 8.0)));
}

TEST_CASE("exact and floating moments agree") {
  std::mt19937_64 rng(8);
  auto st = from_hypergraph(random_uniform(7, 3, rng));
  auto sp = full_spectrum(st);
  auto r = sre(sp, 2);
  CHECK(pl_moment_exact(sp, 2) == *r.exact_moment);
  CHECK(static_cast<double>(pl_moment(sp, 2)) == doctest::Approx(to_double(*r.exact_moment)).epsilon(1e-15));
  CHECK(log2_rational(Rational(1, 1024)) == -10);
  CHECK(static_cast<double>(log2_rational(Rational(3, 1))) == doctest::Approx(std::log2(3.0)).epsilon(1e-15));
}
