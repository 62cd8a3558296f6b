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


#include "verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "ensembles.hpp"
#include "symmetric.hpp"

namespace hgm {

namespace {

std::string str(long double v) {
  std::ostringstream o;
  o.precision(15);
  o << v;
  return o.str();
}

Hypergraph random_graph(int n, std::mt19937_64& rng, int max_edges, int uniform_c = 0) {
  std::vector<Mask> edges;
  std::uniform_int_distribution<int> count(0, max_edges);
  int m = count(rng);
  std::vector<Mask> pool = uniform_c ? c_subsets(n, uniform_c) : std::vector<Mask>{};
  for (int i = 0; i < m; ++i) {
    if (uniform_c) {
      if (pool.empty()) break;
      edges.push_back(pool[rng() % pool.size()]);
    } else {
      Mask e = 0;
      while (e == 0) e = rng() & ((Mask{1} << n) - 1);
      edges.push_back(e);
    }
  }
  return build(n, edges);
}

void add(std::vector<Check>& out, std::string name, bool ok, std::string detail = {}) {
  out.push_back({std::move(name), ok, std::move(detail)});
}

std::vector<Check> suite_route_equality(const VerifyOptions& opt) {
  std::vector<Check> out;
  std::mt19937_64 rng(opt.seed);
  int nmax = opt.n ? opt.n : 5;
  int mismatches = 0, graphs = 50;
  long pairs = 0;
  for (int gi = 0; gi < graphs; ++gi) {
    int n = 1 + gi % nmax;
    Hypergraph g = random_graph(n, rng, 6);
    PhaseState st = from_hypergraph(g);
    for (Mask x = 0; x < (Mask{1} << n); ++x)
      for (Mask z = 0; z < (Mask{1} << n); ++z) {
        Rational d = component_direct(st, {x, z});
        if (d * d != component_induced(g, {x, z})) ++mismatches;
        ++pairs;
      }
  }
  add(out, "direct^2 == induced, 50 graphs, n<=" + std::to_string(nmax), mismatches == 0,
      std::to_string(pairs) + " (x,z) pairs, " + std::to_string(mismatches) + " mismatches");
  int star_bad = 0;
  for (int gi = 0; gi < 50; ++gi) {
    int n = 1 + gi % 6;
    Hypergraph g = random_graph(n, rng, 5);
    for (double a : {0.5, 2.0, 3.0}) {
      auto d = sre(full_spectrum(from_hypergraph(g)), a);
      auto s = sre_star(g, a);
      if (!(d.exact_moment && s.exact_moment && *d.exact_moment == *s.exact_moment)) ++star_bad;
    }
  }
  add(out, "star-trace moments == direct moments, 50 graphs, n<=6", star_bad == 0, std::to_string(star_bad) + " mismatches");
  return out;
}

std::vector<Check> suite_stabilizer_fixed_point(const VerifyOptions& opt) {
  std::vector<Check> out;
  std::mt19937_64 rng(opt.seed + 11);
  int nmax = opt.n ? opt.n : 8;
  int bad = 0;
  long words = 0;
  for (int gi = 0; gi < 20; ++gi) {
    int n = std::max(1, nmax - gi % 4);
    Hypergraph g = random_graph(n, rng, 8);
    PhaseState st = from_hypergraph(g);
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (!(apply_stabilizer(st, stabilizer_word(g, s)) == st)) ++bad;
      ++words;
    }
  }
  add(out, "St(G,s)|G> == |G> for all selectors, 20 graphs, n<=" + std::to_string(nmax), bad == 0,
      std::to_string(words) + " words, " + std::to_string(bad) + " failures");
  return out;
}

std::vector<Check> suite_counting(const VerifyOptions&) {
  std::vector<Check> out;
  BigInt n3 = counting_N(3, 2, 3);
  add(out, "N(3,2,3) == 2752", n3 == 2752, n3.str());
  for (int n = 3; n <= 5; ++n) {
    Rational viaN = Rational(counting_N(3, 2, n), BigInt(1) << (4 * n));
    Rational en = exact_average(3, Rational(1, 2), n, 2);
    add(out, "N(3,2," + std::to_string(n) + ")/2^4n == enumeration", viaN == en, to_string(viaN) + " vs " + to_string(en));
    BigInt r = counting_N_rank(2, n);
    add(out, "GF(2) rank count == brute force, n=" + std::to_string(n), r == counting_N(3, 2, n), r.str());
  }
  Rational second = Rational(counting_N_tau(3, 2, 3, 2), BigInt(1) << 24);
  add(out, "<m2^2> at n=3 == 1145/2048", second == Rational(1145, 2048), to_string(second));
  return out;
}

std::vector<Check> suite_variance(const VerifyOptions&) {
  std::vector<Check> out;
  Rational second = Rational(counting_N_tau(3, 2, 3, 2), BigInt(1) << 24);
  Rational var = second - Rational(43, 64) * Rational(43, 64);
  add(out, "variance at n=3 == 441/4096 <= 60/2^9", var == Rational(441, 4096) && var <= variance_bound(3), to_string(var));
  auto mom4 = exact_raw_moments(3, Rational(1, 2), 4, 2, 2);
  Rational var4 = mom4[1] - mom4[0] * mom4[0];
  add(out, "variance at n=4 <= 60/2^12", var4 <= variance_bound(4), to_string(var4));
  return out;
}

std::vector<Check> suite_composition(const VerifyOptions&) {
  std::vector<Check> out;
  double worst = 0;
  for (int n = 3; n <= 30; ++n) {
    long double v = avg_m2_p(n, 0.5).value, ref = to_double(closed_m2_uniform(n));
    worst = std::max<double>(worst, std::fabs(v / ref - 1));
  }
  add(out, "p=1/2 reproduces 7/2^n - 14/4^n + 8/8^n, n=3..30", worst < 1e-12, "max rel err " + str(worst));
  bool ident = true;
  for (int n = 3; n <= 12; ++n) ident &= std::fabs(avg_m2_p(n, 0.0, CompositionRoute::Literal).value - 1) < 1e-12;
  add(out, "p=0 gives 1 (literal sum), n=3..12", ident);
  add(out, "p=1, n=3 gives 11/32 exactly", avg_m2_p_exact(3, 1) == Rational(11, 32), to_string(avg_m2_p_exact(3, 1)));
  bool fk = true;
  for (int n = 0; n <= 6; ++n) {
    Kappa k{};
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == 7) {
        k[7] = left;
        fk &= f_kappa(k) == f_kappa_triples(k);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        k[pos] = v;
        self(self, pos + 1, left - v);
      }
    };
    rec(rec, 0, n);
  }
  add(out, "composition polynomial == labeled triple count, n<=6", fk);
  bool ex = true;
  for (int n = 3; n <= 6; ++n)
    for (double p : {0.125, 0.25, 0.75})
      ex &= std::fabs(avg_m2_p(n, p, CompositionRoute::Literal).value / to_double(avg_m2_p_exact(n, to_rational(p))) - 1) < 1e-12;
  add(out, "literal log-space sum == exact rational sum, n=3..6", ex);
  for (int n = 4; n <= 5; ++n) {
    Rational en = exact_average(3, Rational(1, 4), n, 2), th = avg_m2_p_exact(n, Rational(1, 4));
    add(out, "p=1/4 composition sum == graph enumeration, n=" + std::to_string(n), en == th, to_string(th));
  }
  double agree = 0;
  for (auto [n, p] : {std::pair{30, 0.01}, {40, 0.005}, {60, 0.005}}) {
    long double a = avg_m2_p(n, p, CompositionRoute::Reduced).log2_value, b = avg_m2_p(n, p, CompositionRoute::Plane).log2_value;
    agree = std::max<double>(agree, std::fabs(a - b));
  }
  add(out, "plane route == reduced route (log2), n in {30,40,60}", agree < 1e-9, "max diff " + str(agree));
  long double lr = avg_m2_p(18, 0.8, CompositionRoute::Literal).value, rr = avg_m2_p(18, 0.8, CompositionRoute::Reduced).value;
  add(out, "signed sums agree at p=0.8, n=18", std::fabs(lr / rr - 1) < 1e-9, str(lr) + " vs " + str(rr));
  return out;
}

std::vector<Check> suite_symmetric(const VerifyOptions& opt) {
  std::vector<Check> out;
  int nmax = opt.n ? opt.n : 10;
  for (int n = 3; n <= nmax; ++n) {
    auto st3 = from_hypergraph(c_complete(n, 3));
    auto stn = from_hypergraph(c_complete(n, n));
    auto r3 = magic_direct(st3, {2.0, 0.5});
    auto rn = magic_direct(stn, {2.0, 0.5});
    auto c32 = closed_3complete(n, 2), c3h = closed_3complete(n, 0.5);
    auto cn2 = closed_ncomplete(n, 2), cnh = closed_ncomplete(n, 0.5);
    bool ok = c32.moment.is_rational() && *r3[0].exact_moment == c32.moment.a && cn2.moment.is_rational() &&
              *rn[0].exact_moment == cn2.moment.a;
    ok &= std::fabs(r3[1].pl_moment / c3h.value - 1) < 1e-12 && std::fabs(rn[1].pl_moment / cnh.value - 1) < 1e-12;
    add(out, "closed forms == brute force, n=" + std::to_string(n), ok,
        "m2(3c)=" + to_string(c32.moment.a) + " m2(nc)=" + to_string(cn2.moment.a));
  }
  add(out, "3-complete and n-complete agree at n=3",
      closed_3complete(3, 2).moment == closed_ncomplete(3, 2).moment &&
          closed_3complete(3, 0.5).moment == closed_ncomplete(3, 0.5).moment);
  for (auto g : {c_complete(6, 3), c_complete(5, 5)}) {
    auto cls = reduced_spectrum(g);
    BigInt total = 0;
    for (const auto& e : cls) total += e.cls.multiplicity;
    auto full = sre(full_spectrum(from_hypergraph(g)), 2);
    auto red = reduced_moment(cls, g.n(), 2);
    add(out, "reduced spectrum m2 == full spectrum m2 (n=" + std::to_string(g.n()) + ", " +
                 std::to_string(g.edge_count()) + " edges)",
        *full.exact_moment == *red.exact_moment && total == (BigInt(1) << (2 * g.n())), to_string(*red.exact_moment));
  }
  bool mono = true;
  for (int n = 3; n <= 30; ++n) mono &= closed_ncomplete(n, 0.5).sre >= closed_ncomplete(n - 1, 0.5).sre - 1e-12;
  add(out, "n-complete M_1/2 non-decreasing, n=2..30", mono);
  bool gap = true;
  for (int n = 6; n <= 40; ++n) gap &= closed_3complete(n, 0.5).sre - closed_3complete(n, 2).sre >= n - 8;
  add(out, "3-complete M_1/2 - M_2 >= n - 8, n=6..40", gap);
  return out;
}

std::vector<Check> suite_bounds(const VerifyOptions& opt) {
  std::vector<Check> out;
  std::mt19937_64 rng(opt.seed + 23);
  int nmax = opt.n ? opt.n : 10;
  int deg_bad = 0, triv_bad = 0, mono_bad = 0, norm_bad = 0, tested = 0;
  for (int gi = 0; gi < 100; ++gi) {
    int n = std::max(3, nmax - gi % 5);
    Hypergraph g = random_graph(n, rng, 3 * n, 3);
    PhaseState st = from_hypergraph(g);
    auto r = magic_direct(st, {0.5, 2.0, 3.0, 4.0});
    auto norm = spectrum_power_sums(st, {1.0})[0];
    if (norm.int_sum != (BigInt(1) << (3 * n))) ++norm_bad;
    for (int i = 1; i <= 2; ++i) {
      double a = r[i].alpha;
      if (r[i].sre > degree_bound(g, a) + 1e-10) ++deg_bad;
      if (r[i].sre > n / (a - 1) + 1e-10) ++triv_bad;
    }
    if (r[0].sre < r[1].sre - 1e-10 || r[1].sre < r[2].sre - 1e-10 || r[2].sre < r[3].sre - 1e-10) ++mono_bad;
    ++tested;
  }
  add(out, "M_alpha <= degree bound, alpha in {2,3}, 100 random 3-uniform graphs", deg_bad == 0, std::to_string(deg_bad) + " violations");
  add(out, "M_alpha <= n/(alpha-1), alpha in {2,3}", triv_bad == 0, std::to_string(triv_bad) + " violations");
  add(out, "spectrum normalization exact", norm_bad == 0, std::to_string(tested) + " spectra");
  add(out, "M_1/2 >= M_2 >= M_3 >= M_4", mono_bad == 0, std::to_string(mono_bad) + " violations");
  bool brk = true;
  for (int n = 12; n <= 40; ++n) {
    Rational v = closed_m2_uniform(n);
    brk &= v >= Rational(BigInt(1), BigInt(1) << n) && to_double(v) <= bound_general(3, 2, n);
  }
  add(out, "2^-n <= <m2> <= 2^-(n-11), n=12..40", brk);
  return out;
}

std::vector<Check> suite_concentration(const VerifyOptions& opt) {
  std::vector<Check> out;
  int n = opt.n ? opt.n : 12;
  std::uint64_t s = opt.samples ? opt.samples : 200;
  auto r = concentration_check(n, s, opt.seed);
  add(out, "Pr[M2 >= n-3] >= 0.95 at n=" + std::to_string(n) + ", " + std::to_string(s) + " samples", r.fraction >= 0.95,
      "fraction " + str(r.fraction) + ", floor " + str(r.floor) + ", min M2 " + str(r.min_sre));
  return out;
}

std::vector<Check> suite_montecarlo(const VerifyOptions& opt) {
  std::vector<Check> out;
  int n = opt.n ? opt.n : 10;
  std::uint64_t s = opt.samples ? opt.samples : 1000;
  auto est = monte_carlo_moment({3, 0.5, n, opt.seed}, 2, s);
  double ref = to_double(closed_m2_uniform(n));
  add(out, "Monte Carlo <m2> within 5 stderr of 7/2^n - 14/4^n + 8/8^n, n=" + std::to_string(n),
      std::fabs(est.mean - ref) <= 5 * est.stderr_, str(est.mean) + " +- " + str(est.stderr_) + " vs " + str(ref));
  auto e3 = monte_carlo_moment({3, 0.5, n, opt.seed + 1}, 3, s / 2);
  add(out, "Monte Carlo <m3> <= 4/2^n + 15/2^2n + 5 stderr", e3.mean <= to_double(bound_e3_alpha(3, n)) + 5 * e3.stderr_,
      str(e3.mean));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"prop1", "obs1", "counting", "variance", "thm6", "symmetric", "bounds", "concentration", "montecarlo"};
  return names;
}

std::vector<Check> run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "prop1") return suite_route_equality(opt);
  if (name == "obs1") return suite_stabilizer_fixed_point(opt);
  if (name == "counting") return suite_counting(opt);
  if (name == "variance") return suite_variance(opt);
  if (name == "thm6") return suite_composition(opt);
  if (name == "symmetric") return suite_symmetric(opt);
  if (name == "bounds") return suite_bounds(opt);
  if (name == "concentration") return suite_concentration(opt);
  if (name == "montecarlo") return suite_montecarlo(opt);
  fail(ErrorKind::InvalidArgument, "unknown verification suite '" + name + "'");
}

}  // namespace hgm
