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


#include "common.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace hgm {

namespace {
std::atomic<int> g_budget{26};
std::atomic<int> g_jobs{0};
thread_local bool t_in_worker = false;
}  // namespace

int sim_budget() { return g_budget.load(); }

void set_sim_budget(int n) {
  require(n >= 1 && n <= 40, "simulation budget must be in [1, 40]");
  g_budget.store(n);
}

void check_budget(int n, const char* what) {
  if (n > sim_budget())
    fail(ErrorKind::Budget, std::string(what) + ": n=" + std::to_string(n) +
                                " exceeds the simulation budget of " + std::to_string(sim_budget()) +
                                " qubits (raise it with --budget or HGM_BUDGET)");
}

int jobs() {
  int k = g_jobs.load();
  if (k > 0) return k;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void set_jobs(int k) {
  require(k >= 0, "jobs must be non-negative");
  g_jobs.store(k);
}

void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& body) {
  std::uint64_t workers = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs()), count);
  if (workers <= 1 || t_in_worker) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  auto run = [&] {
    bool outer = t_in_worker;
    t_in_worker = true;
    try {
      for (std::uint64_t i; !failed.load() && (i = next.fetch_add(1)) < count;) body(i);
    } catch (...) {
      if (!failed.exchange(true)) err = std::current_exception();
    }
    t_in_worker = outer;
  };
  std::vector<std::thread> pool;
  for (std::uint64_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

Rational to_rational(double v) {
  require(std::isfinite(v), "value must be finite");
  int e = 0;
  double m = std::frexp(v, &e);
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  e -= 53;
  Rational r = Rational(mant);
  if (e > 0) r *= Rational(BigInt(1) << e);
  if (e < 0) r /= Rational(BigInt(1) << -e);
  return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace hgm
