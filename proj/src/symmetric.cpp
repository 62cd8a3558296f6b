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


#include "symmetric.hpp"

#include <cmath>

namespace hgm {

namespace {

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Mask low_bits(int k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

void check_sym_alpha(double alpha) {
  require(alpha == 2.0 || alpha == 0.5, "closed forms exist only for alpha in {2, 1/2}");
}

}  // namespace

std::vector<ReducedEntry> reduced_spectrum(const Hypergraph& g) {
  require(is_permutation_invariant(g), "reduced spectrum needs a permutation-invariant hypergraph (complete uniform layers)");
  require(g.n() <= 40, "reduced spectrum supports n <= 40");
  check_budget(g.n(), "reduced spectrum");
  int n = g.n();
  std::vector<ReducedEntry> out;
  for (int m = 0; m <= n; ++m)
    for (int m1 = 0; m1 <= m; ++m1)
      for (int m0 = 0; m0 <= n - m; ++m0) {
        ReducedEntry e;
        e.cls = {m, m1, m0, binom(n, m) * binom(m, m1) * binom(n - m, m0)};
        out.push_back(std::move(e));
      }
  parallel_for(out.size(), [&](std::uint64_t i) {
    auto& e = out[i];
    PauliIndex p{low_bits(e.cls.m), low_bits(e.cls.m1) | (low_bits(e.cls.m0) << e.cls.m)};
    e.trace = phase_trace(induced_full(g, p));
    e.sq_component = Rational(BigInt(e.trace) * e.trace, BigInt(1) << (2 * n));
  });
  return out;
}

MagicReport reduced_moment(const std::vector<ReducedEntry>& classes, int n, double alpha) {
  require(alpha > 0 && alpha != 1.0, "alpha must be positive and != 1");
  MagicReport r;
  r.alpha = alpha;
  r.method = Method::StarTrace;
  if (std::floor(2 * alpha) == 2 * alpha) {
    int k = static_cast<int>(2 * alpha);
    BigInt acc = 0;
    for (const auto& e : classes) acc += e.cls.multiplicity * boost::multiprecision::pow(BigInt(std::abs(e.trace)), k);
    Rational m(acc, BigInt(1) << (n * (1 + k)));
    r.exact_moment = m;
    r.pl_moment = m.convert_to<long double>();
    r.sre = (m == 1) ? 0.0L : log2_rational(m) / (1.0L - alpha);
  } else {
    long double acc = 0;
    for (const auto& e : classes)
      acc += e.cls.multiplicity.convert_to<long double>() *
             std::pow(std::fabs(std::ldexp(static_cast<long double>(e.trace), -n)), 2.0L * alpha);
    r.pl_moment = std::ldexp(acc, -n);
    r.sre = sre_from_moment(r.pl_moment, alpha);
  }
  return r;
}

QSqrt2 QSqrt2::pow2_half(long twice_exponent) {
  long e = twice_exponent >= 0 ? twice_exponent / 2 : -((-twice_exponent + 1) / 2);
  bool half = (twice_exponent - 2 * e) != 0;
  Rational p = e >= 0 ? Rational(BigInt(1) << e) : Rational(BigInt(1), BigInt(1) << -e);
  return half ? QSqrt2(0, p) : QSqrt2(p, 0);
}

long double QSqrt2::value() const { return a.convert_to<long double>() + b.convert_to<long double>() * std::sqrt(2.0L); }

namespace {

ClosedValue finish(double alpha, QSqrt2 m) {
  ClosedValue v;
  v.alpha = alpha;
  v.value = m.value();
  v.sre = (m == QSqrt2(1)) ? 0.0L : sre_from_moment(v.value, alpha);
  v.moment = std::move(m);
  return v;
}

}  // namespace

ClosedValue closed_3complete(int n, double alpha) {
  require(n >= 3, "3-complete closed form needs n >= 3");
  check_sym_alpha(alpha);
  int sgn = (n % 2 == 0) ? 1 : -1;
  if (alpha == 2.0) {
    // 1/8 + 7 / 2^{n + (3 - (-1)^n)/2}
    QSqrt2 m = QSqrt2(Rational(1, 8)) + QSqrt2(7) * QSqrt2::pow2_half(-(2L * n + 3 - sgn));
    return finish(alpha, m);
  }
  // 2^{(2n - 7 - (-1)^n)/4} + 1 - 2^{-n + (1 + (-1)^n)/2}
  long quarter = 2L * n - 7 - sgn;  // exponent times 4
  require(quarter % 2 == 0, "unexpected quarter-integer exponent");
  QSqrt2 m = QSqrt2::pow2_half(quarter / 2) + QSqrt2(1) - QSqrt2::pow2_half(-2L * n + 1 + sgn);
  return finish(alpha, m);
}

ClosedValue closed_ncomplete(int n, double alpha) {
  require(n >= 2, "n-complete closed form needs n >= 2");
  check_sym_alpha(alpha);
  auto inv = [&](int k) { return QSqrt2(Rational(BigInt(1), BigInt(1) << (k * n))); };
  if (alpha == 2.0) {
    QSqrt2 m = QSqrt2(1) - QSqrt2(16) * inv(1) + QSqrt2(112) * inv(2) - QSqrt2(224) * inv(3) + QSqrt2(128) * inv(4);
    return finish(alpha, m);
  }
  return finish(alpha, QSqrt2(3) - QSqrt2(10) * inv(1) + QSqrt2(8) * inv(2));
}

}  // namespace hgm
