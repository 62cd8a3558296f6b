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
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "hgmagic/hgmagic.h"

TEST_CASE("graph lifecycle") {
  hgm_graph* g = nullptr;
  uint64_t masks[] = {0b111, 0b011, 0b111};
  REQUIRE(hgm_graph_build(3, masks, 3, &g) == HGM_OK);
  CHECK(hgm_graph_n(g) == 3);
  CHECK(hgm_graph_edge_count(g) == 2);
  std::vector<uint64_t> edges(2);
  CHECK(hgm_graph_edges(g, edges.data(), edges.size()) == HGM_OK);
  CHECK(hgm_graph_edges(g, edges.data(), 1) == HGM_ERR_INVALID);
  int deg[3];
  double avg = 0;
  CHECK(hgm_graph_degrees(g, deg, 3, &avg) == HGM_OK);
  CHECK(deg[2] == 2);
  CHECK(avg == doctest::Approx(2.0));
  CHECK(hgm_graph_is_symmetric(g) == 0);
  hgm_graph_free(g);
  hgm_graph_free(nullptr);
  REQUIRE(hgm_graph_builtin("3complete:7", &g) == HGM_OK);
  CHECK(hgm_graph_is_symmetric(g) == 1);
  hgm_graph_free(g);
}

TEST_CASE("errors carry status codes and messages") {
  hgm_graph* g = nullptr;
  CHECK(hgm_graph_parse("3\n1 2 9\n", &g) == HGM_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(hgm_last_error()).find("line 2") != std::string::npos);
  CHECK(hgm_graph_builtin("bogus", &g) == HGM_ERR_PARSE);
  CHECK(hgm_graph_load("/nonexistent/file.hg", &g) == HGM_ERR_PARSE);
  CHECK(hgm_graph_build(3, nullptr, 0, nullptr) == HGM_ERR_INVALID);
  CHECK(hgm_set_budget(0) == HGM_ERR_INVALID);

  REQUIRE(hgm_set_budget(6) == HGM_OK);
  REQUIRE(hgm_graph_builtin("empty:8", &g) == HGM_OK);
  hgm_state* s = nullptr;
  CHECK(hgm_state_from_graph(g, &s) == HGM_ERR_BUDGET);
  CHECK(std::string(hgm_last_error()).find("budget") != std::string::npos);
  CHECK(hgm_set_budget(26) == HGM_OK);
  CHECK(hgm_get_budget() == 26);
  hgm_graph_free(g);
}

TEST_CASE("magic through the C interface") {
  hgm_graph* g = nullptr;
  REQUIRE(hgm_graph_builtin("ccz", &g) == HGM_OK);
  double alphas[] = {2.0, 0.5};
  for (hgm_method m : {HGM_METHOD_DIRECT, HGM_METHOD_STAR, HGM_METHOD_SYMMETRIC}) {
    hgm_magic_report r[2];
    REQUIRE(hgm_magic(g, alphas, 2, m, r) == HGM_OK);
    CHECK(r[0].pl_moment == doctest::Approx(11.0 / 32));
    CHECK(r[0].sre == doctest::Approx(std::log2(32.0 / 11)).epsilon(1e-12));
    CHECK(r[1].pl_moment == doctest::Approx(15.0 / 8));
    CHECK(r[0].has_exact);
  }
  hgm_magic_report r;
  CHECK(hgm_magic(g, alphas, 1, HGM_METHOD_CLOSED, &r) == HGM_ERR_UNSUPPORTED);

  size_t needed = 0;
  CHECK(hgm_magic_exact(g, 2.0, HGM_METHOD_DIRECT, nullptr, 0, &needed) == HGM_OK);
  CHECK(needed == 6);
  char small[3];
  CHECK(hgm_magic_exact(g, 2.0, HGM_METHOD_DIRECT, small, sizeof small, &needed) == HGM_ERR_BUFFER);
  char buf[16];
  CHECK(hgm_magic_exact(g, 2.0, HGM_METHOD_DIRECT, buf, sizeof buf, &needed) == HGM_OK);
  CHECK(std::string(buf) == "11/32");

  double bound = 0;
  CHECK(hgm_degree_bound(g, 2.0, &bound) == HGM_OK);
  CHECK(bound == doctest::Approx(2.9328965609));
  CHECK(hgm_robustness_lower_bound(g, &bound) == HGM_OK);
  CHECK(bound == doctest::Approx(std::log2(15.0 / 8)));

  double m = 0, sre = 0;
  CHECK(hgm_closed_form("3complete", 3, 2.0, &m, &sre, buf, sizeof buf, &needed) == HGM_OK);
  CHECK(std::string(buf) == "11/32");
  CHECK(hgm_closed_form("cube", 3, 2.0, &m, &sre, nullptr, 0, nullptr) == HGM_ERR_INVALID);
  hgm_graph_free(g);
}

TEST_CASE("states, stabilizers and spectra") {
  hgm_graph* g = nullptr;
  REQUIRE(hgm_graph_builtin("3complete:5", &g) == HGM_OK);
  hgm_state* s = nullptr;
  REQUIRE(hgm_state_from_graph(g, &s) == HGM_OK);
  hgm_state* t = nullptr;
  REQUIRE(hgm_state_from_graph(g, &t) == HGM_OK);
  for (uint64_t sel = 0; sel < 32; ++sel) {
    REQUIRE(hgm_state_apply_stabilizer(t, g, sel) == HGM_OK);
    CHECK(hgm_state_equal(s, t));
  }
  CHECK(hgm_state_apply_cz(t, 0b00111) == HGM_OK);
  CHECK_FALSE(hgm_state_equal(s, t));

  hgm_spectrum* sp = nullptr;
  REQUIRE(hgm_spectrum_full(s, &sp) == HGM_OK);
  for (uint64_t x = 0; x < 32; x += 7)
    for (uint64_t z = 0; z < 32; z += 3) {
      int64_t raw = 0;
      uint64_t sq = 0, ind = 0;
      REQUIRE(hgm_component_direct(s, x, z, &raw) == HGM_OK);
      REQUIRE(hgm_spectrum_sq_numerator(sp, x, z, &sq) == HGM_OK);
      REQUIRE(hgm_component_induced(g, x, z, &ind) == HGM_OK);
      CHECK(static_cast<uint64_t>(raw * raw) == sq);
      CHECK(sq == ind);
    }
  hgm_magic_report r;
  CHECK(hgm_spectrum_magic(sp, 2.0, &r) == HGM_OK);
  hgm_spectrum_free(sp);
  hgm_state_free(s);
  hgm_state_free(t);
  hgm_graph_free(g);
}

TEST_CASE("ensembles through the C interface") {
  double v = 0;
  char buf[64];
  size_t needed = 0;
  CHECK(hgm_exact_average(3, 0.5, 4, 2, &v, buf, sizeof buf, &needed) == HGM_OK);
  CHECK(std::string(buf) == "197/512");
  CHECK(v == 0.384765625);
  CHECK(hgm_closed_m2_uniform(3, &v, buf, sizeof buf, &needed) == HGM_OK);
  CHECK(std::string(buf) == "43/64");
  CHECK(hgm_counting_n(3, 2, 3, 1, buf, sizeof buf, &needed) == HGM_OK);
  CHECK(std::string(buf) == "2752");

  hgm_ensemble e{3, 0.0, 6, 1};
  hgm_estimate est{};
  CHECK(hgm_monte_carlo(&e, 2.0, 10, &est) == HGM_OK);
  CHECK(est.mean == 1.0);
  e.p = 2.0;
  CHECK(hgm_monte_carlo(&e, 2.0, 10, &est) == HGM_ERR_INVALID);

  hgm_avg_m2 a{};
  CHECK(hgm_avg_m2_p(10, 0.5, HGM_ROUTE_AUTO, &a) == HGM_OK);
  CHECK(a.value == doctest::Approx(6.8225935e-3));
  CHECK(std::string(hgm_route_name(HGM_ROUTE_PLANE)) == "plane");

  hgm_edge_budget b{};
  CHECK(hgm_solve_edge_budget(50, 0.999, &b) == HGM_OK);
  CHECK(b.expected_edges > 150);
  CHECK(hgm_solve_edge_budget(50, 1.5, &b) == HGM_ERR_INVALID);
}

TEST_CASE("verification suites") {
  REQUIRE(hgm_suite_count() >= 7);
  CHECK(std::string(hgm_suite_name(0)) == "prop1");
  CHECK(hgm_suite_name(1000) == nullptr);
  int failures = -1, seen = 0;
  auto cb = [](const char*, int, const char*, void* user) { ++*static_cast<int*>(user); };
  CHECK(hgm_verify("obs1", 0, 0, 1, cb, &seen, &failures) == HGM_OK);
  CHECK(failures == 0);
  CHECK(seen > 0);
  CHECK(hgm_verify("nope", 0, 0, 1, nullptr, nullptr, &failures) != HGM_OK);
}
