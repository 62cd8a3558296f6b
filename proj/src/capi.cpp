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


#include "hgmagic/hgmagic.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>

#include "ensembles.hpp"
#include "symmetric.hpp"
#include "verify.hpp"

struct hgm_graph {
  hgm::Hypergraph g;
};
struct hgm_state {
  hgm::PhaseState s;
};
struct hgm_spectrum {
  hgm::PauliSpectrum sp;
};

namespace {

thread_local std::string t_error;

template <class F>
hgm_status guard(F&& f) {
  try {
    f();
    t_error.clear();
    return HGM_OK;
  } catch (const hgm::Error& e) {
    t_error = e.what();
    switch (e.kind()) {
      case hgm::ErrorKind::InvalidArgument: return HGM_ERR_INVALID;
      case hgm::ErrorKind::Budget: return HGM_ERR_BUDGET;
      case hgm::ErrorKind::Parse: return HGM_ERR_PARSE;
      case hgm::ErrorKind::Unsupported: return HGM_ERR_UNSUPPORTED;
    }
    return HGM_ERR_INTERNAL;
  } catch (const std::bad_alloc&) {
    t_error = "out of memory";
    return HGM_ERR_BUDGET;
  } catch (const std::exception& e) {
    t_error = e.what();
    return HGM_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) hgm::fail(hgm::ErrorKind::InvalidArgument, std::string(what) + " must not be null");
}

// Copies s into buf when it fits; always reports the required size.
void put_string(const std::string& s, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf) return;
  if (cap < s.size() + 1) hgm::fail(hgm::ErrorKind::InvalidArgument, "output buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
}

hgm_status put_string_status(const std::string& s, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (buf && cap < s.size() + 1) {
    t_error = "output buffer too small: need " + std::to_string(s.size() + 1) + " bytes";
    return HGM_ERR_BUFFER;
  }
  if (buf) std::memcpy(buf, s.c_str(), s.size() + 1);
  return HGM_OK;
}

hgm_magic_report to_c(const hgm::MagicReport& r, hgm_method m) {
  hgm_magic_report o{};
  o.alpha = r.alpha;
  o.pl_moment = static_cast<double>(r.pl_moment);
  o.log2_moment = r.exact_moment ? static_cast<double>(hgm::log2_rational(*r.exact_moment))
                                 : static_cast<double>(std::log2(r.pl_moment));
  o.sre = static_cast<double>(r.sre);
  o.method = m;
  o.has_exact = r.exact_moment.has_value();
  return o;
}

std::vector<hgm::MagicReport> magic_reports(const hgm::Hypergraph& g, const std::vector<double>& alphas, hgm_method m) {
  switch (m) {
    case HGM_METHOD_DIRECT: return hgm::magic_direct(hgm::from_hypergraph(g), alphas);
    case HGM_METHOD_STAR: return hgm::magic_star(g, alphas);
    case HGM_METHOD_SYMMETRIC: {
      auto cls = hgm::reduced_spectrum(g);
      std::vector<hgm::MagicReport> out;
      for (double a : alphas) out.push_back(hgm::reduced_moment(cls, g.n(), a));
      return out;
    }
    case HGM_METHOD_CLOSED: break;
  }
  hgm::fail(hgm::ErrorKind::Unsupported, "closed-form method applies only to named families; use hgm_closed_form");
}

hgm::CompositionRoute route_of(hgm_route r) {
  switch (r) {
    case HGM_ROUTE_AUTO: return hgm::CompositionRoute::Auto;
    case HGM_ROUTE_IDENTITY: return hgm::CompositionRoute::Identity;
    case HGM_ROUTE_LITERAL: return hgm::CompositionRoute::Literal;
    case HGM_ROUTE_REDUCED: return hgm::CompositionRoute::Reduced;
    case HGM_ROUTE_PLANE: return hgm::CompositionRoute::Plane;
    case HGM_ROUTE_ZERO_SUPPORT: return hgm::CompositionRoute::ZeroSupport;
  }
  hgm::fail(hgm::ErrorKind::InvalidArgument, "unknown route");
}

hgm_route route_to_c(hgm::CompositionRoute r) { return static_cast<hgm_route>(static_cast<int>(r)); }

}  // namespace

extern "C" {

const char* hgm_last_error(void) { return t_error.c_str(); }
const char* hgm_version(void) { return "1.0.0"; }

hgm_status hgm_set_budget(int n) { return guard([&] { hgm::set_sim_budget(n); }); }
int hgm_get_budget(void) { return hgm::sim_budget(); }
hgm_status hgm_set_jobs(int jobs) { return guard([&] { hgm::set_jobs(jobs); }); }
int hgm_get_jobs(void) { return hgm::jobs(); }

hgm_status hgm_graph_build(int n, const uint64_t* masks, size_t count, hgm_graph** out) {
  return guard([&] {
    need(out, "out");
    if (count) need(masks, "masks");
    *out = new hgm_graph{hgm::build(n, std::vector<hgm::Mask>(masks, masks + count))};
  });
}

hgm_status hgm_graph_c_complete(int n, int c, hgm_graph** out) {
  return guard([&] {
    need(out, "out");
    *out = new hgm_graph{hgm::c_complete(n, c)};
  });
}

hgm_status hgm_graph_parse(const char* text, hgm_graph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new hgm_graph{hgm::parse_text(text)};
  });
}

hgm_status hgm_graph_load(const char* path, hgm_graph** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    std::ifstream in(path);
    if (!in) hgm::fail(hgm::ErrorKind::Parse, std::string("cannot open hypergraph file '") + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      *out = new hgm_graph{hgm::parse_text(ss.str())};
    } catch (const hgm::Error& e) {
      hgm::fail(e.kind(), std::string(path) + ": " + e.what());
    }
  });
}

hgm_status hgm_graph_builtin(const char* name, hgm_graph** out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    *out = new hgm_graph{hgm::builtin(name)};
  });
}

void hgm_graph_free(hgm_graph* g) { delete g; }
int hgm_graph_n(const hgm_graph* g) { return g ? g->g.n() : 0; }
size_t hgm_graph_edge_count(const hgm_graph* g) { return g ? g->g.edge_count() : 0; }

int hgm_graph_is_symmetric(const hgm_graph* g) { return g && hgm::is_permutation_invariant(g->g) ? 1 : 0; }

hgm_status hgm_graph_edges(const hgm_graph* g, uint64_t* out, size_t cap) {
  return guard([&] {
    need(g, "graph");
    if (cap < g->g.edge_count()) hgm::fail(hgm::ErrorKind::InvalidArgument, "edge buffer too small");
    std::copy(g->g.edges().begin(), g->g.edges().end(), out);
  });
}

hgm_status hgm_graph_degrees(const hgm_graph* g, int* per_vertex, size_t cap, double* average) {
  return guard([&] {
    need(g, "graph");
    auto d = hgm::degree_profile(g->g);
    if (per_vertex) {
      if (cap < d.per_vertex.size()) hgm::fail(hgm::ErrorKind::InvalidArgument, "degree buffer too small");
      std::copy(d.per_vertex.begin(), d.per_vertex.end(), per_vertex);
    }
    if (average) *average = hgm::to_double(d.average);
  });
}

hgm_status hgm_graph_induced(const hgm_graph* g, uint64_t x, uint64_t z, int star, hgm_graph** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = new hgm_graph{star ? hgm::induced_star(g->g, {x, z}) : hgm::induced_full(g->g, {x, z})};
  });
}

hgm_status hgm_state_from_graph(const hgm_graph* g, hgm_state** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = new hgm_state{hgm::from_hypergraph(g->g)};
  });
}

void hgm_state_free(hgm_state* s) { delete s; }
int hgm_state_n(const hgm_state* s) { return s ? s->s.n() : 0; }
int hgm_state_sign(const hgm_state* s, uint64_t a) { return (s && a < s->s.size()) ? s->s.sign(a) : -1; }
int hgm_state_negated(const hgm_state* s) { return s ? s->s.negated() : 0; }
int hgm_state_equal(const hgm_state* a, const hgm_state* b) { return a && b && a->s == b->s; }

hgm_status hgm_state_apply_cz(hgm_state* s, uint64_t edge) {
  return guard([&] {
    need(s, "state");
    s->s = hgm::apply_cz(s->s, edge);
  });
}

hgm_status hgm_state_apply_stabilizer(hgm_state* s, const hgm_graph* g, uint64_t selector) {
  return guard([&] {
    need(s, "state");
    need(g, "graph");
    if (s->s.n() != g->g.n()) hgm::fail(hgm::ErrorKind::InvalidArgument, "state and graph sizes differ");
    s->s = hgm::apply_stabilizer(s->s, hgm::stabilizer_word(g->g, selector));
  });
}

hgm_status hgm_phase_trace(const hgm_graph* g, int64_t* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = hgm::phase_trace(g->g);
  });
}

hgm_status hgm_component_direct(const hgm_state* s, uint64_t x, uint64_t z, int64_t* raw) {
  return guard([&] {
    need(s, "state");
    need(raw, "out");
    *raw = hgm::component_direct_raw(s->s, {x, z});
  });
}

hgm_status hgm_component_induced(const hgm_graph* g, uint64_t x, uint64_t z, uint64_t* numerator) {
  return guard([&] {
    need(g, "graph");
    need(numerator, "out");
    auto tr = hgm::phase_trace(hgm::induced_full(g->g, {x, z}));
    *numerator = static_cast<uint64_t>(tr * tr);
  });
}

hgm_status hgm_spectrum_full(const hgm_state* s, hgm_spectrum** out) {
  return guard([&] {
    need(s, "state");
    need(out, "out");
    *out = new hgm_spectrum{hgm::full_spectrum(s->s)};
  });
}

void hgm_spectrum_free(hgm_spectrum* sp) { delete sp; }

hgm_status hgm_spectrum_sq_numerator(const hgm_spectrum* sp, uint64_t x, uint64_t z, uint64_t* out) {
  return guard([&] {
    need(sp, "spectrum");
    need(out, "out");
    if (((x | z) >> sp->sp.n()) != 0) hgm::fail(hgm::ErrorKind::InvalidArgument, "Pauli index exceeds n bits");
    *out = sp->sp.sq_numerator(x, z);
  });
}

hgm_status hgm_spectrum_write_csv(const hgm_spectrum* sp, const char* path) {
  return guard([&] {
    need(sp, "spectrum");
    need(path, "path");
    std::ofstream f(path);
    if (!f) hgm::fail(hgm::ErrorKind::InvalidArgument, std::string("cannot write '") + path + "'");
    hgm::write_spectrum_csv(sp->sp, f);
  });
}

hgm_status hgm_star_trace_sum(const hgm_graph* g, double alpha, double* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = static_cast<double>(hgm::star_trace_sum(g->g, alpha));
  });
}

const char* hgm_method_name(hgm_method m) {
  switch (m) {
    case HGM_METHOD_DIRECT: return "direct-spectrum";
    case HGM_METHOD_STAR: return "star-trace";
    case HGM_METHOD_CLOSED: return "closed-form";
    case HGM_METHOD_SYMMETRIC: return "symmetry-reduced";
  }
  return "?";
}

hgm_status hgm_magic(const hgm_graph* g, const double* alphas, size_t count, hgm_method method, hgm_magic_report* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    if (count) need(alphas, "alphas");
    auto reps = magic_reports(g->g, std::vector<double>(alphas, alphas + count), method);
    for (size_t i = 0; i < count; ++i) out[i] = to_c(reps[i], method);
  });
}

hgm_status hgm_magic_exact(const hgm_graph* g, double alpha, hgm_method method, char* buf, size_t cap, size_t* needed) {
  std::string s;
  hgm_status st = guard([&] {
    need(g, "graph");
    auto r = magic_reports(g->g, {alpha}, method)[0];
    if (!r.exact_moment) hgm::fail(hgm::ErrorKind::InvalidArgument, "exact moments need 2*alpha to be an integer");
    s = hgm::to_string(*r.exact_moment);
  });
  return st != HGM_OK ? st : put_string_status(s, buf, cap, needed);
}

hgm_status hgm_spectrum_magic(const hgm_spectrum* sp, double alpha, hgm_magic_report* out) {
  return guard([&] {
    need(sp, "spectrum");
    need(out, "out");
    *out = to_c(hgm::sre(sp->sp, alpha), HGM_METHOD_DIRECT);
  });
}

hgm_status hgm_degree_bound(const hgm_graph* g, double alpha, double* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = static_cast<double>(hgm::degree_bound(g->g, alpha));
  });
}

hgm_status hgm_robustness_lower_bound(const hgm_graph* g, double* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = static_cast<double>(hgm::robustness_lower_bound(hgm::from_hypergraph(g->g)));
  });
}

hgm_status hgm_closed_form(const char* family, int n, double alpha, double* moment, double* sre, char* exact, size_t cap,
                           size_t* needed) {
  std::string s;
  hgm_status st = guard([&] {
    need(family, "family");
    hgm::ClosedValue v;
    if (std::strcmp(family, "3complete") == 0)
      v = hgm::closed_3complete(n, alpha);
    else if (std::strcmp(family, "ncomplete") == 0)
      v = hgm::closed_ncomplete(n, alpha);
    else
      hgm::fail(hgm::ErrorKind::InvalidArgument, std::string("unknown family '") + family + "' (3complete, ncomplete)");
    if (moment) *moment = static_cast<double>(v.value);
    if (sre) *sre = static_cast<double>(v.sre);
    s = hgm::to_string(v.moment.a);
    if (!v.moment.is_rational()) s += " + " + hgm::to_string(v.moment.b) + "*sqrt(2)";
  });
  if (st != HGM_OK || (!exact && !needed)) return st;
  return put_string_status(s, exact, cap, needed);
}

static hgm::EnsembleSpec spec_of(const hgm_ensemble* e) { return {e->c, e->p, e->n, e->seed}; }

hgm_status hgm_ensemble_sample(const hgm_ensemble* e, uint64_t index, hgm_graph** out) {
  return guard([&] {
    need(e, "ensemble");
    need(out, "out");
    *out = new hgm_graph{hgm::sample(spec_of(e), index)};
  });
}

hgm_status hgm_monte_carlo(const hgm_ensemble* e, double alpha, uint64_t samples, hgm_estimate* out) {
  return guard([&] {
    need(e, "ensemble");
    need(out, "out");
    auto est = hgm::monte_carlo_moment(spec_of(e), alpha, samples);
    *out = {est.mean, est.stderr_, est.samples, est.alpha};
  });
}

hgm_status hgm_exact_average(int c, double p, int n, int alpha, double* value, char* exact, size_t cap, size_t* needed) {
  std::string s;
  hgm_status st = guard([&] {
    auto r = hgm::exact_average(c, hgm::to_rational(p), n, alpha);
    if (value) *value = hgm::to_double(r);
    s = hgm::to_string(r);
  });
  if (st != HGM_OK || (!exact && !needed)) return st;
  return put_string_status(s, exact, cap, needed);
}

hgm_status hgm_closed_m2_uniform(int n, double* value, char* exact, size_t cap, size_t* needed) {
  std::string s;
  hgm_status st = guard([&] {
    auto r = hgm::closed_m2_uniform(n);
    if (value) *value = hgm::to_double(r);
    s = hgm::to_string(r);
  });
  if (st != HGM_OK || (!exact && !needed)) return st;
  return put_string_status(s, exact, cap, needed);
}

hgm_status hgm_bound_general(int c, int alpha, int n, double* out) {
  return guard([&] {
    need(out, "out");
    *out = static_cast<double>(hgm::bound_general(c, alpha, n));
  });
}

hgm_status hgm_sre_lower_bound_general(int c, int alpha, int n, double* out) {
  return guard([&] {
    need(out, "out");
    *out = static_cast<double>(hgm::sre_lower_bound_general(c, alpha, n));
  });
}

hgm_status hgm_bound_e3_alpha(int alpha, int n, double* out) {
  return guard([&] {
    need(out, "out");
    *out = hgm::to_double(hgm::bound_e3_alpha(alpha, n));
  });
}

hgm_status hgm_variance_bound(int n, double* out) {
  return guard([&] {
    need(out, "out");
    *out = hgm::to_double(hgm::variance_bound(n));
  });
}

hgm_status hgm_counting_n(int c, int alpha, int n, int tau, char* buf, size_t cap, size_t* needed) {
  std::string s;
  hgm_status st = guard([&] { s = hgm::counting_N_tau(c, alpha, n, tau).str(); });
  return st != HGM_OK ? st : put_string_status(s, buf, cap, needed);
}

hgm_status hgm_concentration_check(int n, uint64_t samples, uint64_t seed, hgm_concentration* out) {
  return guard([&] {
    need(out, "out");
    auto r = hgm::concentration_check(n, samples, seed);
    *out = {r.fraction, r.floor, r.above, r.samples, r.min_sre};
  });
}

const char* hgm_route_name(hgm_route r) {
  try {
    return hgm::route_name(route_of(r));
  } catch (...) {
    return "?";
  }
}

hgm_status hgm_avg_m2_p(int n, double p, hgm_route route, hgm_avg_m2* out) {
  return guard([&] {
    need(out, "out");
    auto r = hgm::avg_m2_p(n, p, route_of(route));
    *out = {static_cast<double>(r.value), static_cast<double>(r.log2_value), r.sign, route_to_c(r.route)};
  });
}

hgm_status hgm_solve_edge_budget(int n, double gamma, hgm_edge_budget* out) {
  return guard([&] {
    need(out, "out");
    auto r = hgm::solve_edge_budget(n, gamma);
    *out = {r.p, r.expected_edges, r.target, r.achieved, r.evaluations, route_to_c(r.route)};
  });
}

size_t hgm_suite_count(void) { return hgm::suite_names().size(); }
const char* hgm_suite_name(size_t i) { return i < hgm::suite_names().size() ? hgm::suite_names()[i].c_str() : nullptr; }

hgm_status hgm_verify(const char* suite, int n, uint64_t samples, uint64_t seed, hgm_check_cb cb, void* user, int* failures) {
  return guard([&] {
    need(suite, "suite");
    auto checks = hgm::run_suite(suite, {n, samples, seed});
    int bad = 0;
    for (const auto& c : checks) {
      bad += !c.passed;
      if (cb) cb(c.name.c_str(), c.passed, c.detail.c_str(), user);
    }
    if (failures) *failures = bad;
  });
}

}  // extern "C"
