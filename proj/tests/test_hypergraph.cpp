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

#include "doctest.h"
#include "hypergraph.hpp"

using namespace hgm;

namespace {
Hypergraph fig1() { return build(6, {mask_of({1, 2, 3}), mask_of({3, 5, 6}), mask_of({1, 4}), mask_of({5})}); }

bool has_edge(const Hypergraph& g, std::vector<int> vs) {
  Mask m = mask_of(vs);
  for (Mask e : g.edges())
    if (e == m) return true;
  return false;
}
}  // namespace

TEST_CASE("build normalizes and validates edges") {
  auto g = build(3, {0b111, 0b111});
  CHECK(g.edge_count() == 1);
  CHECK(g == build(3, {0b111}));
  CHECK(fig1().edge_count() == 4);
  CHECK_THROWS_AS(build(3, {0b1000}), Error);
  CHECK_THROWS_AS(build(3, {0}), Error);
  CHECK_THROWS_AS(build(0, {}), Error);
  CHECK_THROWS_AS(build(64, {}), Error);
}

TEST_CASE("c-complete edge counts") {
  CHECK(c_complete(3, 3).edges() == std::vector<Mask>{0b111});
  CHECK(c_complete(4, 3).edge_count() == 4);
  CHECK(c_complete(6, 3).edge_count() == 20);
  CHECK(c_subsets(10, 3).size() == 120);
}

TEST_CASE("degree profile") {
  auto d = degree_profile(fig1());
  CHECK(d.per_vertex == std::vector<int>{3, 2, 4, 1, 2, 2});
  CHECK(d.average == Rational(14, 6));

  auto k = degree_profile(c_complete(7, 3));
  for (int v : k.per_vertex) CHECK(v == 6);
  CHECK(k.average == 6);

  auto one = degree_profile(build(2, {0b01}));
  CHECK(one.per_vertex == std::vector<int>{0, 0});
}

TEST_CASE("induced hypergraph of the six-vertex example") {
  PauliIndex p{mask_of({1, 3, 5}), mask_of({1, 4})};
  auto full = induced_full(fig1(), p);
  CHECK(has_edge(full, {1, 2}));
  auto star = induced_star(fig1(), p);
  std::vector<Mask> ones;
  for (Mask e : star.edges())
    if (popcount(e) == 1) ones.push_back(e);
  CHECK(ones == std::vector<Mask>{mask_of({1}), mask_of({4})});
}

TEST_CASE("induced hypergraph at x = 0 has no higher edges") {
  auto g = induced_full(fig1(), {0, 0});
  for (Mask e : g.edges()) CHECK(popcount(e) == 1);
  auto s = induced_star(fig1(), {0, mask_of({2, 6})});
  CHECK(s.edges() == std::vector<Mask>{mask_of({2}), mask_of({6})});
}

TEST_CASE("induced hypergraph of a single 3-edge") {
  auto g = induced_full(build(3, {0b111}), {0b011, 0});
  CHECK(has_edge(g, {2, 3}));
  CHECK(has_edge(g, {1, 3}));
  CHECK_FALSE(has_edge(g, {1, 2}));
  CHECK(has_edge(g, {3}));
  CHECK(g.edge_count() == 3);
}

TEST_CASE("3-complete induced graph splits into two cliques") {
  auto g = c_complete(8, 3);
  Mask x = 0b00000111;
  auto h = induced_higher_edges(g, x);
  Mask a = x, b = ~x & 0xff;
  for (Mask e : h) {
    CHECK(popcount(e) == 2);
    bool inside = (e & a) == e || (e & b) == e;
    CHECK(inside);
  }
  CHECK(h.size() == 3 + 10);
}

TEST_CASE("permutation invariance") {
  CHECK(is_permutation_invariant(c_complete(6, 3)));
  CHECK(is_permutation_invariant(build(4, {})));
  CHECK_FALSE(is_permutation_invariant(fig1()));
}

TEST_CASE("text format round trip and errors") {
  auto g = parse_text("# six vertices\n6\n1 2 3\n3 5 6\n1 4\n5\n");
  CHECK(g == fig1());
  CHECK(parse_text(to_text(g)) == g);
  CHECK_THROWS_AS(parse_text("3\n1 2 4\n"), Error);
  CHECK_THROWS_AS(parse_text("3\n1 2 2\n"), Error);
  CHECK_THROWS_AS(parse_text("3\n1 2\n2 1\n"), Error);
  try {
    parse_text("3\n1 2\n1 9\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("builtin aliases") {
  CHECK(builtin("ccz") == c_complete(3, 3));
  CHECK(builtin("triangle").edge_count() == 3);
  CHECK(builtin("empty:5").edge_count() == 0);
  CHECK(builtin("3complete:5").edge_count() == 10);
  CHECK(builtin("ncomplete:4").edges() == std::vector<Mask>{0b1111});
  CHECK_THROWS_AS(builtin("nope"), Error);
  CHECK_THROWS_AS(builtin("3complete:x"), Error);
}
