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


#include "magic.hpp"

#include <cmath>

namespace hgm {

const char* method_name(Method m) {
  switch (m) {
    case Method::DirectSpectrum: return "direct-spectrum";
    case Method::StarTrace: return "star-trace";
    case Method::ClosedForm: return "closed-form";
  }
  return "?";
}

namespace {

long double log2_big(const BigInt& v) {
  std::size_t bits = msb(v);
  if (bits < 60) return std::log2(v.convert_to<long double>());
  BigInt top = v >> (bits - 60);
  return std::log2(top.convert_to<long double>()) + static_cast<long double>(bits - 60);
}

void check_alpha(double alpha) {
  require(alpha > 0 && std::isfinite(alpha), "Renyi order alpha must be positive");
}

MagicReport report_from(const PowerSum& ps, int n, Method method) {
  MagicReport r;
  r.alpha = ps.alpha;
  r.method = method;
  if (ps.exact) {
    int k = static_cast<int>(2 * ps.alpha);
    Rational m(ps.int_sum, BigInt(1) << (n * (1 + k)));
    r.exact_moment = m;
    r.pl_moment = m.convert_to<long double>();
    r.sre = (m == 1) ? 0.0L : log2_rational(m) / (1.0L - ps.alpha);
  } else {
    r.pl_moment = std::ldexp(ps.real_sum, -n);
    r.sre = sre_from_moment(r.pl_moment, ps.alpha);
  }
  return r;
}

}  // namespace

long double log2_rational(const Rational& r) {
  require(r > 0, "log of a non-positive value");
  return log2_big(numerator(r)) - log2_big(denominator(r));
}

long double sre_from_moment(long double m, double alpha) {
  require(alpha != 1.0, "alpha = 1 is not supported (the Renyi entropy formula is undefined there)");
  return std::log2(m) / (1.0L - alpha);
}

long double pl_moment(const PauliSpectrum& spec, double alpha) {
  check_alpha(alpha);
  int n = spec.n();
  long double scale = std::ldexp(1.0L, -n), s = 0, c = 0;
  for (auto w : spec.raw_table()) {
    if (!w) continue;
    long double v = std::pow(std::fabs(w * scale), 2.0L * alpha), t = s + v;
    c += std::fabs(s) >= std::fabs(v) ? (s - t) + v : (v - t) + s;
    s = t;
  }
  return std::ldexp(s + c, -n);
}

Rational pl_moment_exact(const PauliSpectrum& spec, double alpha) {
  check_alpha(alpha);
  require(std::floor(2 * alpha) == 2 * alpha, "exact moments need 2*alpha to be an integer");
  int k = static_cast<int>(2 * alpha), n = spec.n();
  BigInt acc = 0;
  for (auto w : spec.raw_table())
    if (w) acc += boost::multiprecision::pow(BigInt(std::abs(w)), k);
  return Rational(acc, BigInt(1) << (n * (1 + k)));
}

MagicReport sre(const PauliSpectrum& spec, double alpha) {
  check_alpha(alpha);
  require(alpha != 1.0, "alpha = 1 is not supported (the Renyi entropy formula is undefined there)");
  MagicReport r;
  r.alpha = alpha;
  r.method = Method::DirectSpectrum;
  if (std::floor(2 * alpha) == 2 * alpha) {
    Rational m = pl_moment_exact(spec, alpha);
    r.exact_moment = m;
    r.pl_moment = m.convert_to<long double>();
    r.sre = (m == 1) ? 0.0L : log2_rational(m) / (1.0L - alpha);
  } else {
    r.pl_moment = pl_moment(spec, alpha);
    r.sre = sre_from_moment(r.pl_moment, alpha);
  }
  return r;
}

std::vector<MagicReport> magic_direct(const PhaseState& state, const std::vector<double>& alphas) {
  for (double a : alphas) require(a != 1.0, "alpha = 1 is not supported (the Renyi entropy formula is undefined there)");
  std::vector<MagicReport> out;
  for (const auto& ps : spectrum_power_sums(state, alphas))
    out.push_back(report_from(ps, state.n(), Method::DirectSpectrum));
  return out;
}

std::vector<MagicReport> magic_star(const Hypergraph& g, const std::vector<double>& alphas) {
  for (double a : alphas) require(a != 1.0, "alpha = 1 is not supported (the Renyi entropy formula is undefined there)");
  std::vector<MagicReport> out;
  for (const auto& ps : star_power_sums(g, alphas)) out.push_back(report_from(ps, g.n(), Method::StarTrace));
  return out;
}

MagicReport sre_star(const Hypergraph& g, double alpha) { return magic_star(g, {alpha})[0]; }

long double degree_bound(const Hypergraph& g, double alpha) {
  require(alpha >= 2, "the degree bound holds only for alpha >= 2");
  long double dbar = degree_profile(g).average.convert_to<long double>();
  return g.n() / (alpha - 1.0L) * (1.0L - std::log2(1.0L + std::exp2(-(2.0L * alpha - 1.0L) * dbar)));
}

long double robustness_lower_bound(const PauliSpectrum& spec) { return 0.5L * sre(spec, 0.5).sre; }

long double robustness_lower_bound(const PhaseState& state) { return 0.5L * magic_direct(state, {0.5})[0].sre; }

}  // namespace hgm
