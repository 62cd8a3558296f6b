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
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "hgmagic/hgmagic.h"
#include "json.hpp"

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kVerifyFailed = 3, kBudget = 4 };

struct ApiError : std::runtime_error {
  hgm_status status;
  ApiError(hgm_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(hgm_status s) {
  if (s != HGM_OK) throw ApiError(s, hgm_last_error());
}

int exit_code(hgm_status s) {
  switch (s) {
    case HGM_ERR_BUDGET: return kBudget;
    case HGM_ERR_INVALID:
    case HGM_ERR_PARSE:
    case HGM_ERR_UNSUPPORTED: return kUsage;
    default: return kInternal;
  }
}

struct GraphDeleter {
  void operator()(hgm_graph* g) const { hgm_graph_free(g); }
};
using Graph = std::unique_ptr<hgm_graph, GraphDeleter>;

template <class F>
std::string read_string(F&& call) {
  size_t needed = 0;
  check(call(nullptr, 0, &needed));
  std::string s(needed, '\0');
  check(call(s.data(), s.size(), &needed));
  s.resize(needed ? needed - 1 : 0);
  return s;
}

// ---- tabular output ----

using Cell = std::variant<std::monostate, std::string, double, long long>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> summary;
};

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return "";
  if (auto* d = std::get_if<double>(&c)) return fmt_double(*d);
  if (auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

nlohmann::ordered_json json_value(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return nullptr;
  if (auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(fmt_double(*d));
  if (auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

struct Provenance {
  std::string command;
  unsigned long long seed = 0;
  std::vector<std::pair<std::string, std::string>> flags;
};

void write_table(std::ostream& out, const std::string& format, const Provenance& prov, const Table& t) {
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["provenance"]["tool"] = "hgmagic";
    doc["provenance"]["version"] = hgm_version();
    doc["provenance"]["command"] = prov.command;
    doc["provenance"]["seed"] = prov.seed;
    for (const auto& [k, v] : prov.flags) doc["provenance"]["flags"][k] = v;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      nlohmann::ordered_json row;
      for (size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = json_value(r[i]);
      doc["rows"].push_back(row);
    }
    if (!t.summary.empty()) {
      for (const auto& [k, v] : t.summary) doc["summary"][k] = v;
    }
    out << doc.dump(2) << "\n";
    return;
  }
  out << "# hgmagic " << hgm_version() << "\n";
  out << "# command: " << prov.command << "\n";
  out << "# seed: " << prov.seed << "\n";
  out << "# flags:";
  for (const auto& [k, v] : prov.flags) out << " --" << k << "=" << v;
  out << "\n";
  for (size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << "\n";
  for (const auto& r : t.rows) {
    for (size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
    out << "\n";
  }
  for (const auto& [k, v] : t.summary) out << "# summary " << k << ": " << v.dump() << "\n";
}

// ---- options ----

struct Global {
  int jobs = 0;
  int budget = 26;
  unsigned long long seed = 1;
  std::string output;
  std::string format = "csv";
};

struct ExactOpts {
  std::string graph, builtin, method = "auto", spectrum_csv;
  std::vector<double> alphas{2.0};
};

struct EnsembleOpts {
  int c = 3, n = 0;
  double p = 0.5;
  std::vector<double> alphas{2.0};
  unsigned long long samples = 0;
  bool exact = false, theory = false;
};

struct SweepOpts {
  std::vector<double> gammas{0.999};
  int n_from = 50, n_to = 500, step = 50;
};

struct VerifyOpts {
  std::string suite;
  int n = 0;
  unsigned long long samples = 0;
};

std::string join(const std::vector<double>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt_double(v[i]);
  return s;
}

bool is_integer(double a) { return std::floor(a) == a; }

// ---- commands ----

Graph load_graph(const ExactOpts& o, std::string* label) {
  hgm_graph* g = nullptr;
  if (!o.builtin.empty()) {
    check(hgm_graph_builtin(o.builtin.c_str(), &g));
    *label = o.builtin;
  } else {
    check(hgm_graph_load(o.graph.c_str(), &g));
    *label = o.graph;
  }
  return Graph(g);
}

// Maps a builtin alias onto a symmetric family with a closed form, if any.
std::optional<std::pair<std::string, int>> closed_family(const std::string& builtin) {
  if (builtin == "ccz") return std::make_pair(std::string("3complete"), 3);
  for (const char* fam : {"3complete", "ncomplete"}) {
    std::string prefix = std::string(fam) + ":";
    if (builtin.rfind(prefix, 0) == 0) {
      try {
        return std::make_pair(std::string(fam), std::stoi(builtin.substr(prefix.size())));
      } catch (...) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

Table cmd_exact(const ExactOpts& o) {
  std::string label;
  Graph g = load_graph(o, &label);
  int n = hgm_graph_n(g.get());

  Table t;
  t.columns = {"graph", "n", "alpha", "pl_moment", "exact_moment", "sre", "method", "degree_bound"};
  auto degree_bound = [&](double a) -> Cell {
    if (a < 2) return std::monostate{};
    double b = 0;
    check(hgm_degree_bound(g.get(), a, &b));
    return b;
  };

  if (o.method == "closed") {
    auto fam = closed_family(o.builtin);
    if (!fam) throw ApiError(HGM_ERR_UNSUPPORTED, "--method closed needs --builtin ccz, 3complete:N or ncomplete:N");
    for (double a : o.alphas) {
      double m = 0, s = 0;
      std::string exact = read_string([&](char* b, size_t cap, size_t* need) {
        return hgm_closed_form(fam->first.c_str(), fam->second, a, &m, &s, b, cap, need);
      });
      t.rows.push_back({label, (long long)n, a, m, exact, s, std::string(hgm_method_name(HGM_METHOD_CLOSED)), degree_bound(a)});
    }
    return t;
  }

  hgm_method method = HGM_METHOD_DIRECT;
  if (o.method == "star") method = HGM_METHOD_STAR;
  else if (o.method == "symmetric") method = HGM_METHOD_SYMMETRIC;
  else if (o.method == "auto" && n <= 40 && hgm_graph_is_symmetric(g.get())) method = HGM_METHOD_SYMMETRIC;

  std::vector<hgm_magic_report> reps(o.alphas.size());
  check(hgm_magic(g.get(), o.alphas.data(), o.alphas.size(), method, reps.data()));
  for (size_t i = 0; i < reps.size(); ++i) {
    const auto& r = reps[i];
    Cell exact;
    if (r.has_exact) {
      exact = read_string([&](char* b, size_t cap, size_t* need) { return hgm_magic_exact(g.get(), r.alpha, method, b, cap, need); });
    }
    t.rows.push_back({label, (long long)n, r.alpha, r.pl_moment, exact, r.sre, std::string(hgm_method_name(r.method)),
                      degree_bound(r.alpha)});
  }

  if (!o.spectrum_csv.empty()) {
    hgm_state* s = nullptr;
    check(hgm_state_from_graph(g.get(), &s));
    hgm_spectrum* sp = nullptr;
    hgm_status st = hgm_spectrum_full(s, &sp);
    hgm_state_free(s);
    check(st);
    st = hgm_spectrum_write_csv(sp, o.spectrum_csv.c_str());
    hgm_spectrum_free(sp);
    check(st);
  }
  return t;
}

Cell ensemble_bound(int c, double p, int n, double alpha) {
  if (p != 0.5 || !is_integer(alpha) || alpha < 2) return std::monostate{};
  double b = 0;
  if (c == 3 && alpha >= 3) {
    if (hgm_bound_e3_alpha(static_cast<int>(alpha), n, &b) == HGM_OK) return b;
  } else if (hgm_bound_general(c, static_cast<int>(alpha), n, &b) == HGM_OK) {
    return b;
  }
  return std::monostate{};
}

Table cmd_ensemble(const EnsembleOpts& o, unsigned long long seed) {
  Table t;
  if (o.exact) {
    t.columns = {"c", "p", "n", "alpha", "method", "value", "exact", "bound"};
    for (double a : o.alphas) {
      if (!is_integer(a) || a < 1) throw ApiError(HGM_ERR_INVALID, "--exact needs integer alpha >= 1");
      double v = 0;
      std::string exact = read_string([&](char* b, size_t cap, size_t* need) {
        return hgm_exact_average(o.c, o.p, o.n, static_cast<int>(a), &v, b, cap, need);
      });
      t.rows.push_back({(long long)o.c, o.p, (long long)o.n, a, std::string("exact-enumeration"), v, exact,
                        ensemble_bound(o.c, o.p, o.n, a)});
    }
    return t;
  }
  if (o.theory) {
    t.columns = {"c", "p", "n", "alpha", "method", "value", "log2_value", "exact", "bound"};
    for (double a : o.alphas) {
      if (o.c != 3 || a != 2) {
        throw ApiError(HGM_ERR_UNSUPPORTED, "--theory values exist for -c 3 --alpha 2 only; use --samples or --exact");
      }
      if (o.p == 0.5) {
        double v = 0;
        std::string exact = read_string([&](char* b, size_t cap, size_t* need) { return hgm_closed_m2_uniform(o.n, &v, b, cap, need); });
        t.rows.push_back({(long long)o.c, o.p, (long long)o.n, a, std::string("closed-form"), v, std::log2(v), exact,
                          ensemble_bound(o.c, o.p, o.n, a)});
      }
      hgm_avg_m2 r{};
      check(hgm_avg_m2_p(o.n, o.p, HGM_ROUTE_AUTO, &r));
      t.rows.push_back({(long long)o.c, o.p, (long long)o.n, a, std::string("composition:") + hgm_route_name(r.route),
                        r.value, r.log2_value, std::monostate{}, ensemble_bound(o.c, o.p, o.n, a)});
    }
    return t;
  }
  t.columns = {"c", "p", "n", "alpha", "method", "samples", "mean", "stderr", "seed", "bound"};
  hgm_ensemble e{o.c, o.p, o.n, seed};
  unsigned long long samples = o.samples ? o.samples : 1000;
  for (double a : o.alphas) {
    hgm_estimate est{};
    check(hgm_monte_carlo(&e, a, samples, &est));
    t.rows.push_back({(long long)o.c, o.p, (long long)o.n, a, std::string("monte-carlo"), (long long)est.samples, est.mean,
                      est.std_error, (long long)seed, ensemble_bound(o.c, o.p, o.n, a)});
  }
  return t;
}

Table cmd_sweep(const SweepOpts& o) {
  if (o.step <= 0) throw ApiError(HGM_ERR_INVALID, "--step must be positive");
  for (double g : o.gammas) {
    if (!(g > 0 && g < 1)) throw ApiError(HGM_ERR_INVALID, "--gamma values must lie in (0, 1), got " + fmt_double(g));
  }
  Table t;
  t.columns = {"n", "gamma", "p", "expected_edges", "sre_lower_bound", "method", "status"};
  for (double g : o.gammas) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long long pts = 0;
    for (int n = o.n_from; n <= o.n_to; n += o.step) {
      hgm_edge_budget b{};
      hgm_status st = hgm_solve_edge_budget(n, g, &b);
      if (st != HGM_OK) {
        t.rows.push_back({(long long)n, g, std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{},
                          std::string("unreachable: ") + hgm_last_error()});
        continue;
      }
      t.rows.push_back({(long long)n, g, b.p, b.expected_edges, b.achieved, std::string("composition:") + hgm_route_name(b.route),
                        std::string("ok")});
      sx += n, sy += b.expected_edges, sxx += double(n) * n, sxy += n * b.expected_edges, ++pts;
    }
    nlohmann::ordered_json s;
    s["points"] = pts;
    if (pts >= 2) {
      double slope = (pts * sxy - sx * sy) / (pts * sxx - sx * sx);
      s["slope"] = slope;
      s["intercept"] = (sy - slope * sx) / pts;
    } else {
      s["slope"] = nullptr;
    }
    t.summary.emplace_back("gamma=" + fmt_double(g), s);
  }
  return t;
}

Table cmd_verify(const VerifyOpts& o, unsigned long long seed, int* failures) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    for (size_t i = 0; i < hgm_suite_count(); ++i) suites.emplace_back(hgm_suite_name(i));
  } else {
    suites.push_back(o.suite);
  }
  Table t;
  t.columns = {"suite", "check", "status", "detail"};
  *failures = 0;
  for (const auto& s : suites) {
    struct Ctx {
      Table* t;
      const std::string* suite;
    } ctx{&t, &s};
    int bad = 0;
    check(hgm_verify(s.c_str(), o.n, o.samples, seed, [](const char* name, int passed, const char* detail, void* user) {
      auto* c = static_cast<Ctx*>(user);
      c->t->rows.push_back({*c->suite, std::string(name), std::string(passed ? "PASS" : "FAIL"), std::string(detail)});
      std::fprintf(stderr, "[%s] %s %s: %s\n", c->suite->c_str(), passed ? "PASS" : "FAIL", name, detail);
    }, &ctx, &bad));
    *failures += bad;
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and statistical magic (stabilizer Renyi entropy) of hypergraph states"};
  app.set_version_flag("--version", std::string(hgm_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Global gl;
  app.add_option("--jobs", gl.jobs, "Worker threads (0 = all cores)")->envname("HGM_JOBS")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", gl.budget, "Largest qubit count for exponential simulation")->envname("HGM_BUDGET")->check(CLI::Range(1, 40))->capture_default_str();
  app.add_option("--seed", gl.seed, "Random seed")->capture_default_str();
  app.add_option("-o,--output", gl.output, "Output file (default stdout)");
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  ExactOpts ex;
  auto* exact = app.add_subcommand("exact", "Exact moments and SRE of one hypergraph state");
  auto* og = exact->add_option("--graph", ex.graph, "Hypergraph text file")->check(CLI::ExistingFile);
  auto* ob = exact->add_option("--builtin", ex.builtin, "ccz, triangle, empty:N, 3complete:N, ncomplete:N");
  og->excludes(ob);
  exact->add_option("--alpha", ex.alphas, "Renyi orders")->delimiter(',')->capture_default_str();
  exact->add_option("--method", ex.method, "Computation route")
      ->check(CLI::IsMember({"auto", "direct", "star", "symmetric", "closed"}))
      ->capture_default_str();
  exact->add_option("--spectrum-csv", ex.spectrum_csv, "Also write the full squared Pauli spectrum");

  EnsembleOpts en;
  auto* ens = app.add_subcommand("ensemble", "Average moments over random hypergraph ensembles");
  ens->add_option("-c", en.c, "Edge cardinality")->capture_default_str();
  ens->add_option("-p", en.p, "Edge probability")->capture_default_str();
  ens->add_option("-n", en.n, "Qubits")->required();
  ens->add_option("--alpha", en.alphas, "Renyi orders")->delimiter(',')->capture_default_str();
  auto* os = ens->add_option("--samples", en.samples, "Monte Carlo samples (default 1000)");
  auto* oe = ens->add_flag("--exact", en.exact, "Enumerate every hypergraph in the ensemble");
  auto* ot = ens->add_flag("--theory", en.theory, "Closed-form and composition-sum values");
  os->excludes(oe)->excludes(ot);
  oe->excludes(ot);

  SweepOpts sw;
  auto* sweep = app.add_subcommand("sweep", "Edge budget needed to reach a fraction of the maximal magic");
  sweep->add_option("--gamma", sw.gammas, "Target fractions in (0,1)")->delimiter(',')->capture_default_str();
  sweep->add_option("--n-from", sw.n_from)->capture_default_str();
  sweep->add_option("--n-to", sw.n_to)->capture_default_str();
  sweep->add_option("--step", sw.step)->capture_default_str();

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::vector<std::string> names{"all"};
  for (size_t i = 0; i < hgm_suite_count(); ++i) names.emplace_back(hgm_suite_name(i));
  verify->add_option("suite", vo.suite, "Suite name")->required()->check(CLI::IsMember(names));
  verify->add_option("--n", vo.n, "Qubit count (0 = suite default)");
  verify->add_option("--samples", vo.samples, "Sample count (0 = suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (exact->parsed() && ex.graph.empty() && ex.builtin.empty()) {
    std::cerr << "error: exact needs --graph FILE or --builtin NAME\n";
    return kUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  Provenance prov;
  prov.command = cmd->get_name();
  prov.seed = gl.seed;
  // Parallelism and output location never change results, so they stay out of the header.
  for (CLI::App* scope : {&app, cmd}) {
    for (const CLI::Option* opt : scope->get_options()) {
      std::string name = opt->get_single_name();
      if (name.empty() || name == "help" || name == "version" || name == "jobs" || name == "output") continue;
      std::string value;
      if (opt->count() > 0 && opt->get_expected_max() == 0) {
        value = "true";
      } else if (opt->count() > 0) {
        for (const auto& r : opt->results()) value += (value.empty() ? "" : ",") + r;
      } else {
        value = opt->get_default_str();
        if (value.size() >= 2 && value.front() == '[' && value.back() == ']') value = value.substr(1, value.size() - 2);
      }
      if (value.empty()) continue;
      prov.flags.emplace_back(name, value);
    }
  }

  try {
    check(hgm_set_budget(gl.budget));
    check(hgm_set_jobs(gl.jobs));
    Table table;
    int rc = kOk;
    if (exact->parsed()) {
      table = cmd_exact(ex);
    } else if (ens->parsed()) {
      table = cmd_ensemble(en, gl.seed);
    } else if (sweep->parsed()) {
      table = cmd_sweep(sw);
    } else {
      int failures = 0;
      table = cmd_verify(vo, gl.seed, &failures);
      if (failures) rc = kVerifyFailed;
    }
    if (gl.output.empty()) {
      write_table(std::cout, gl.format, prov, table);
    } else {
      std::ofstream f(gl.output, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write '" << gl.output << "'\n";
        return kUsage;
      }
      write_table(f, gl.format, prov, table);
    }
    return rc;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
