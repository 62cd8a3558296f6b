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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "hgmagic/hgmagic.h"

namespace {

using u128 = unsigned __int128;

struct Ctx {
  std::string detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string str(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.15g", v);
  return b;
}

template <class F>
std::string fetch(F&& call) {
  size_t need = 0;
  if (call(nullptr, 0, &need) != HGM_OK) return std::string("error: ") + hgm_last_error();
  std::string s(need, '\0');
  if (call(s.data(), s.size(), &need) != HGM_OK) return std::string("error: ") + hgm_last_error();
  s.resize(need - 1);
  return s;
}

// Parses "a/b" or "a" into a fraction with 128-bit parts.
bool parse_frac(const std::string& s, u128& num, u128& den) {
  num = 0, den = 0;
  size_t i = 0;
  for (; i < s.size() && s[i] != '/'; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    num = num * 10 + (s[i] - '0');
  }
  if (i == s.size()) return den = 1, true;
  for (++i; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    den = den * 10 + (s[i] - '0');
  }
  return den != 0;
}

bool frac_eq(const std::string& s, u128 num, u128 den) {
  u128 a, b;
  return parse_frac(s, a, b) && a * den == num * b;
}

hgm_graph* builtin(const char* name) {
  hgm_graph* g = nullptr;
  if (hgm_graph_builtin(name, &g) != HGM_OK) std::fprintf(stderr, "builtin %s: %s\n", name, hgm_last_error());
  return g;
}

void crit1(Ctx& c) {
  hgm_graph* ccz = builtin("ccz");
  double a2[] = {2.0};
  hgm_magic_report r{};
  c.expect(hgm_magic(ccz, a2, 1, HGM_METHOD_DIRECT, &r) == HGM_OK, hgm_last_error());
  std::string m2 = fetch([&](char* b, size_t cap, size_t* need) { return hgm_magic_exact(ccz, 2.0, HGM_METHOD_DIRECT, b, cap, need); });
  c.expect(m2 == "11/32", "m2(CCZ) = " + m2);
  c.expect(std::fabs(r.sre - std::log2(32.0 / 11.0)) < 1e-12, "M2(CCZ) = " + str(r.sre));

  double mv = 0, sre = 0;
  std::string via3 = fetch([&](char* b, size_t cap, size_t* need) { return hgm_closed_form("3complete", 3, 0.5, &mv, &sre, b, cap, need); });
  std::string viaN = fetch([&](char* b, size_t cap, size_t* need) { return hgm_closed_form("ncomplete", 3, 0.5, &mv, &sre, b, cap, need); });
  std::string direct = fetch([&](char* b, size_t cap, size_t* need) { return hgm_magic_exact(ccz, 0.5, HGM_METHOD_DIRECT, b, cap, need); });
  c.expect(via3 == "15/8" && viaN == "15/8" && direct == "15/8", "m_1/2(CCZ): " + via3 + ", " + viaN + ", " + direct);

  for (double alpha : {2.0, 0.5}) {
    std::string cz = fetch([&](char* b, size_t cap, size_t* need) { return hgm_closed_form("ncomplete", 2, alpha, &mv, &sre, b, cap, need); });
    c.expect(cz == "1" && sre == 0.0, "n-complete n=2 alpha=" + str(alpha) + ": " + cz + ", SRE " + str(sre));
  }
  hgm_graph* cz = builtin("ncomplete:2");
  double both[] = {2.0, 0.5};
  hgm_magic_report rr[2];
  c.expect(hgm_magic(cz, both, 2, HGM_METHOD_DIRECT, rr) == HGM_OK && rr[0].sre == 0.0 && rr[1].sre == 0.0 &&
               rr[0].pl_moment == 1.0 && rr[1].pl_moment == 1.0,
           "CZ spectrum moments");
  hgm_graph_free(cz);
  hgm_graph_free(ccz);
  if (c.ok) c.detail = "m2(CCZ)=11/32, M2=" + str(r.sre) + ", m_1/2=15/8 by both closed forms, CZ moments 1";
}

void crit2(Ctx& c) {
  double v = 0;
  std::string n3 = fetch([&](char* b, size_t cap, size_t* need) { return hgm_exact_average(3, 0.5, 3, 2, &v, b, cap, need); });
  std::string n4 = fetch([&](char* b, size_t cap, size_t* need) { return hgm_exact_average(3, 0.5, 4, 2, &v, b, cap, need); });
  std::string c3 = fetch([&](char* b, size_t cap, size_t* need) { return hgm_closed_m2_uniform(3, &v, b, cap, need); });
  std::string c4 = fetch([&](char* b, size_t cap, size_t* need) { return hgm_closed_m2_uniform(4, &v, b, cap, need); });
  c.expect(n3 == "43/64" && c3 == n3, "n=3: enumeration " + n3 + ", closed " + c3);
  c.expect(frac_eq(n4, 384765625, 1000000000) && c4 == n4, "n=4: enumeration " + n4 + ", closed " + c4);
  if (c.ok) c.detail = "n=3: 43/64, n=4: " + n4 + " = 0.384765625";
}

void crit3(Ctx& c) {
  for (int n = 3; n <= 5; ++n) {
    double v = 0;
    std::string N = fetch([&](char* b, size_t cap, size_t* need) { return hgm_counting_n(3, 2, n, 1, b, cap, need); });
    std::string avg = fetch([&](char* b, size_t cap, size_t* need) { return hgm_exact_average(3, 0.5, n, 2, &v, b, cap, need); });
    u128 num, den, a, b;
    bool ok = parse_frac(N, num, den) && parse_frac(avg, a, b) && num * b == a * (u128(1) << (4 * n));
    c.expect(ok, "n=" + std::to_string(n) + ": N=" + N + " vs enumeration " + avg);
    if (n == 3) c.expect(N == "2752", "N(3,2,3)=" + N);
  }
  if (c.ok) c.detail = "N(3,2,3)=2752; N/2^4n equals the enumeration average for n=3,4,5";
}

void crit4(Ctx& c) {
  std::string N2 = fetch([&](char* b, size_t cap, size_t* need) { return hgm_counting_n(3, 2, 3, 2, b, cap, need); });
  u128 n2, d;
  bool ok = parse_frac(N2, n2, d);
  // <m2^2> = N2 / 2^24 must equal 1145/2048
  c.expect(ok && n2 * 2048 == u128(1145) << 24, "N2=" + N2);
  // variance = 1145/2048 - (43/64)^2 = 441/4096, from the counted moments
  double v = 0;
  std::string first = fetch([&](char* b, size_t cap, size_t* need) { return hgm_exact_average(3, 0.5, 3, 2, &v, b, cap, need); });
  u128 a, b;
  ok = ok && parse_frac(first, a, b);
  // var * 2^24 * b^2 = n2 * b^2 - a^2 * 2^24
  bool var_ok = ok && (n2 * b * b - a * a * (u128(1) << 24)) * 4096 == u128(441) * (u128(1) << 24) * b * b;
  c.expect(var_ok, "variance from N2 and <m2>=" + first);
  double bound = 0;
  c.expect(hgm_variance_bound(3, &bound) == HGM_OK && 441.0 / 4096 <= bound && bound == 60.0 / 512, "variance bound " + str(bound));
  if (c.ok) c.detail = "<m2^2>=1145/2048, variance 441/4096 <= 60/512";
}

void crit5(Ctx& c) {
  double worst = 0;
  for (int n = 3; n <= 30; ++n) {
    hgm_avg_m2 r{};
    double want = 0;
    hgm_closed_m2_uniform(n, &want, nullptr, 0, nullptr);
    if (hgm_avg_m2_p(n, 0.5, HGM_ROUTE_AUTO, &r) != HGM_OK) {
      c.expect(false, std::string("p=1/2: ") + hgm_last_error());
      continue;
    }
    worst = std::max(worst, std::fabs(r.value / want - 1));
  }
  c.expect(worst < 1e-12, "p=1/2 max relative error " + str(worst));
  for (int n : {3, 10, 30, 100}) {
    hgm_avg_m2 r{};
    c.expect(hgm_avg_m2_p(n, 0.0, HGM_ROUTE_AUTO, &r) == HGM_OK && r.value == 1.0, "p=0, n=" + std::to_string(n));
  }
  hgm_avg_m2 r{};
  c.expect(hgm_avg_m2_p(3, 1.0, HGM_ROUTE_AUTO, &r) == HGM_OK && std::fabs(r.value - 11.0 / 32) < 1e-15, "p=1, n=3: " + str(r.value));
  if (c.ok) c.detail = "p=1/2 matches the closed form for n=3..30 (max rel err " + str(worst) + "), p=0 gives 1, p=1 gives 11/32";
}

void crit6(Ctx& c) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int pts = 0;
  for (int n = 50; n <= 500; n += 50) {
    hgm_edge_budget b{};
    if (hgm_solve_edge_budget(n, 0.999, &b) != HGM_OK) {
      c.expect(false, "n=" + std::to_string(n) + ": " + hgm_last_error());
      continue;
    }
    sx += n, sy += b.expected_edges, sxx += double(n) * n, sxy += n * b.expected_edges, ++pts;
  }
  double slope = pts >= 2 ? (pts * sxy - sx * sy) / (pts * sxx - sx * sx) : NAN;
  c.expect(pts == 10 && slope >= 2.7 && slope <= 3.3, "slope " + str(slope) + " over " + std::to_string(pts) + " points");
  c.detail = "slope of expected edge count vs n, gamma=0.999, n=50..500: " + str(slope) + (c.ok ? "" : " | " + c.detail);
}

void crit7(Ctx& c) {
  hgm_concentration r{};
  c.expect(hgm_concentration_check(12, 200, 1, &r) == HGM_OK, hgm_last_error());
  c.expect(r.fraction >= 0.95, "fraction " + str(r.fraction));
  c.detail = "n=12: " + std::to_string(r.above) + "/" + std::to_string(r.samples) + " samples with M2 >= n-3 (floor " +
             str(r.floor) + ", min M2 " + str(r.min_sre) + ")" + (c.ok ? "" : " | " + c.detail);
}

void crit8(Ctx& c) {
  int total = 0;
  for (const char* suite : {"prop1", "obs1", "bounds", "symmetric", "montecarlo"}) {
    int failures = 0;
    struct Acc {
      Ctx* c;
      int* total;
      const char* suite;
    } acc{&c, &total, suite};
    auto cb = [](const char* name, int passed, const char* detail, void* user) {
      auto* a = static_cast<Acc*>(user);
      ++*a->total;
      if (!passed) a->c->expect(false, std::string(a->suite) + ": " + name + " (" + detail + ")");
    };
    if (hgm_verify(suite, 0, 0, 1, cb, &acc, &failures) != HGM_OK) c.expect(false, std::string(suite) + ": " + hgm_last_error());
  }
  if (c.ok) c.detail = std::to_string(total) + " property checks across route equality, stabilizers, bounds, symmetric forms, sampling";
}

}  // namespace

int main() {
  struct Crit {
    int id;
    const char* title;
    double limit_s;
    std::function<void(Ctx&)> run;
  };
  const std::vector<Crit> crits = {
      {1, "golden closed-form values", 1, crit1},
      {2, "ensemble closed form vs enumeration", 10, crit2},
      {3, "counting oracle", 60, crit3},
      {4, "second moment and variance", 60, crit4},
      {5, "composition-sum reductions", 30, crit5},
      {6, "edge budget slope", 300, crit6},
      {7, "concentration at n=12", 600, crit7},
      {8, "property suites", 600, crit8},
  };
  int failed = 0;
  for (const auto& cr : crits) {
    Ctx c;
    auto t0 = std::chrono::steady_clock::now();
    cr.run(c);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_s) c.expect(false, "runtime " + str(secs) + " s exceeds " + str(cr.limit_s) + " s");
    failed += !c.ok;
    std::printf("%s criterion %d (%s) [%.2f s]: %s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.title, secs, c.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
