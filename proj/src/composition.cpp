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


#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "ensembles.hpp"

namespace hgm {

std::int64_t f_kappa(const Kappa& k) {
  std::int64_t c = k[0], a1 = k[2], b1 = k[3], a2 = k[4], b2 = k[5], a3 = k[6], b3 = k[7];
  std::int64_t k1 = a1 + b1, k2 = a2 + b2, k3 = a3 + b3;
  return c * (k1 * k2 + k2 * k3 + k3 * k1) + a1 * b1 * (k2 + k3) + a2 * b2 * (k3 + k1) + a3 * b3 * (k1 + k2) +
         a1 * b2 * b3 + a2 * b3 * b1 + a3 * b1 * b2 + a1 * a2 * a3;
}

std::int64_t f_kappa_triples(const Kappa& k) {
  static constexpr std::uint32_t kCols[4] = {0b0000, 0b0011, 0b0101, 0b1001};
  std::vector<std::uint32_t> t;
  std::vector<int> x;
  for (int cls = 0; cls < 4; ++cls)
    for (int sgn = 0; sgn < 2; ++sgn)
      for (int r = 0; r < k[2 * cls + sgn]; ++r) {
        t.push_back(kCols[cls]);
        x.push_back(sgn == 0);
      }
  auto par = [&](int i, int j) { return popcount(t[i] & t[j]) & 1; };
  std::int64_t count = 0;
  int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l) count += (x[i] * par(j, l) + x[j] * par(i, l) + x[l] * par(i, j)) & 1;
  return count;
}

const char* route_name(CompositionRoute r) {
  switch (r) {
    case CompositionRoute::Auto: return "auto";
    case CompositionRoute::Identity: return "identity";
    case CompositionRoute::Literal: return "literal";
    case CompositionRoute::Reduced: return "reduced";
    case CompositionRoute::Plane: return "plane";
    case CompositionRoute::ZeroSupport: return "zero-support";
  }
  return "?";
}

namespace {

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

struct LogAcc {
  long double m = kNegInf, s = 0;
  void add(long double x) {
    if (x == kNegInf) return;
    if (x > m) {
      s = s * std::exp(m - x) + 1;
      m = x;
    } else {
      s += std::exp(x - m);
    }
  }
  void merge(const LogAcc& o) {
    if (o.m == kNegInf) return;
    if (o.m > m) {
      s = s * std::exp(m - o.m) + o.s;
      m = o.m;
    } else {
      s += o.s * std::exp(o.m - m);
    }
  }
};

struct SignedAcc {
  LogAcc pos, neg;
  void add(long double x, bool negative) { (negative ? neg : pos).add(x); }
  void merge(const SignedAcc& o) {
    pos.merge(o.pos);
    neg.merge(o.neg);
  }
  // Natural log of |pos - neg| and its sign.
  std::pair<long double, int> result() const {
    if (neg.m == kNegInf) return {pos.m + std::log(pos.s), 1};
    if (pos.m == kNegInf) return {neg.m + std::log(neg.s), -1};
    long double top = std::max(pos.m, neg.m);
    long double d = pos.s * std::exp(pos.m - top) - neg.s * std::exp(neg.m - top);
    if (d == 0) return {kNegInf, 1};
    return {top + std::log(std::fabs(d)), d > 0 ? 1 : -1};
  }
};

std::vector<long double> log_factorials(int n) {
  std::vector<long double> lf(n + 1, 0);
  for (int i = 1; i <= n; ++i) lf[i] = lf[i - 1] + std::log(static_cast<long double>(i));
  return lf;
}

AvgM2 finish(std::pair<long double, int> ln_sum, int n, CompositionRoute route) {
  AvgM2 r;
  r.route = route;
  r.sign = ln_sum.second;
  r.log2_value = ln_sum.first / kLn2 - 3.0L * n;
  r.value = r.sign * std::exp2(r.log2_value);
  return r;
}

// lambda-power helper: returns false when lambda^e is exactly zero.
struct Lambda {
  long double lam, ln_abs;
  explicit Lambda(double p) : lam(1.0L - 2.0L * p), ln_abs(lam == 0 ? kNegInf : std::log(std::fabs(lam))) {}
  bool term(std::int64_t e, long double& ln, bool& negative) const {
    if (lam == 0) {
      ln = 0;
      negative = false;
      return e == 0;
    }
    ln = e * ln_abs;
    negative = lam < 0 && (e & 1);
    return true;
  }
};

AvgM2 route_literal(int n, double p) {
  Lambda lam(p);
  auto lf = log_factorials(n);
  // Split on k0+ so workers own disjoint slices of the composition space.
  std::vector<SignedAcc> acc(n + 1);
  parallel_for(n + 1, [&](std::uint64_t first) {
    Kappa k{};
    k[0] = static_cast<int>(first);
    SignedAcc local;
    auto rec = [&](auto&& self, int pos, int left, long double lnm) -> void {
      if (pos == 7) {
        k[7] = left;
        lnm -= lf[left];
        long double ln;
        bool neg;
        if (lam.term(f_kappa(k), ln, neg)) local.add(lnm + ln, neg);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        k[pos] = v;
        self(self, pos + 1, left - v, lnm - lf[v]);
      }
    };
    rec(rec, 1, n - k[0], lf[n] - lf[k[0]]);
    acc[first] = local;
  });
  SignedAcc total;
  for (const auto& a : acc) total.merge(a);
  return finish(total.result(), n, CompositionRoute::Literal);
}

// Class 0 is summed in closed form: sum_c C(r,c) lambda^{c*S2} = (1 + lambda^S2)^r.
AvgM2 route_reduced(int n, double p) {
  Lambda lam(p);
  auto lf = log_factorials(n);
  std::vector<SignedAcc> acc(n + 1);
  parallel_for(n + 1, [&](std::uint64_t kk1) {
    int k1 = static_cast<int>(kk1);
    SignedAcc local;
    for (int k2 = 0; k1 + k2 <= n; ++k2)
      for (int k3 = 0; k1 + k2 + k3 <= n; ++k3) {
        int r = n - k1 - k2 - k3;
        std::int64_t K = k1 + k2 + k3, S2 = std::int64_t{k1} * k2 + std::int64_t{k2} * k3 + std::int64_t{k3} * k1;
        long double base;
        if (lam.lam == 0) {
          base = r * std::log(S2 == 0 ? 2.0L : 1.0L);
        } else {
          long double ls;
          bool neg;
          lam.term(S2, ls, neg);
          long double one_plus = 1.0L + (neg ? -1.0L : 1.0L) * std::exp(ls);
          if (one_plus <= 0) {
            if (r > 0) continue;
            base = 0;
          } else {
            base = r * (neg ? std::log(one_plus) : std::log1p(std::exp(ls)));
          }
        }
        long double pre = lf[n] - lf[r] + base;
        for (int a1 = 0; a1 <= k1; ++a1)
          for (int a2 = 0; a2 <= k2; ++a2)
            for (int a3 = 0; a3 <= k3; ++a3) {
              std::int64_t b1 = k1 - a1, b2 = k2 - a2, b3 = k3 - a3;
              std::int64_t g = a1 * b1 * (K - k1) + a2 * b2 * (K - k2) + a3 * b3 * (K - k3) + a1 * b2 * b3 +
                               b1 * a2 * b3 + b1 * b2 * a3 + std::int64_t{a1} * a2 * a3;
              long double ln;
              bool neg;
              if (!lam.term(g, ln, neg)) continue;
              local.add(pre - lf[a1] - lf[b1] - lf[a2] - lf[b2] - lf[a3] - lf[b3] + ln, neg);
            }
      }
    acc[k1] = local;
  });
  SignedAcc total;
  for (const auto& a : acc) total.merge(a);
  return finish(total.result(), n, CompositionRoute::Reduced);
}

// Fast route for 0 < lambda < 1. The eight classes form GF(2)^3 with 0- as
// the origin and f counts linearly independent vertex triples, so the weight
// is invariant under GL(3,2). Its seven 2D subspaces carry f = 0; the sum is
// 7 times the sum over configurations whose least-occupied complement is the
// plane {0-,1-,2-,3-}, ties split evenly. In plane coordinates
// (c = k0+, a_i = ki+, b_i = ki-, U = c + a1 + a2 + a3):
//   f = U e2(b) + b1 l1 + b2 l2 + b3 l3 + K,
// and (k0-, b3) are summed analytically per (b1, b2).
constexpr std::uint64_t kPlaneWorkLimit = 400'000'000;

class PlaneSum {
 public:
  PlaneSum(int n, double p, double eps, double shell_tol)
      : n_(n), p_(p), ll_(std::log1p(-2.0 * p)), eps_(eps), shell_tol_(shell_tol) {
    lf_.resize(n + 1);
    lf_[0] = 0;
    for (int i = 1; i <= n; ++i) lf_[i] = lf_[i - 1] + std::log(static_cast<double>(i));
    lref_ = 2.0 * n * std::log(2.0);
    t1p_.resize(static_cast<std::size_t>(n) * n / 2 + 10);
    for (std::size_t i = 0; i < t1p_.size(); ++i) t1p_[i] = std::log1p(std::exp(i * ll_));
  }

  // Returns sum / 4^n. Cutoffs are relative to the running total.
  double run() {
    double z = 0, prev_shell = 0;
    for (U_ = 0; U_ <= n_; ++U_) {
      tol_ = eps_ * std::max(1.0, z);
      double shell = 0;
      for (c_ = 0; c_ <= U_; ++c_)
        for (a1_ = 0; a1_ <= U_ - c_; ++a1_)
          for (a2_ = a1_; a2_ <= U_ - c_ - a1_; ++a2_) {
            a3_ = U_ - c_ - a1_ - a2_;
            if (a3_ < a2_) break;
            int mult = (a1_ == a2_ && a2_ == a3_) ? 1 : ((a1_ == a2_ || a2_ == a3_) ? 3 : 6);
            shell += mult * defect();
            if (terms_ > kPlaneWorkLimit)
              fail(ErrorKind::Budget, "plane-region sum for n=" + std::to_string(n_) + ", p=" + std::to_string(p_) +
                                          " exceeds its work limit; small edge densities at large n are out of reach");
          }
      z += shell;
      if (U_ > 0 && shell < shell_tol_ * std::max(1.0, z) && shell <= prev_shell) break;
      prev_shell = shell;
    }
    return 7 * z;
  }

 private:
  double l1p(long F) const { return F < static_cast<long>(t1p_.size()) ? t1p_[F] : std::log1p(std::exp(F * ll_)); }
  double lbin(int R, int j, double lq) const { return lf_[R] - lf_[j] - lf_[R - j] + j * lq; }

  // log of sum_{b3 >= max(L)} C(R,b3) q^b3 w(b3), with the tie weight w.
  bool b3sum(int R, long F1, int T0, const int L[4], double& out) const {
    int Lmax = std::max(std::max(L[0], L[1]), std::max(L[2], L[3]));
    int lo = std::max(Lmax, 0);
    if (lo > R) return false;
    double base = 1.0 / (1 + T0);
    if (Lmax < 0) {
      out = R * l1p(F1) + (T0 ? std::log(base) : 0.0);
      return true;
    }
    double lq = F1 * ll_, q = std::exp(lq), mean = R * q / (1 + q), lfull = R * l1p(F1), s;
    if (lo == 0) {
      s = 1;
    } else if (lo <= mean) {
      double part = 0, t = std::exp(-lfull);
      for (int j = 0; j < lo; ++j) {
        part += t;
        t *= q * (R - j) / (j + 1);
      }
      s = 1 - part;
    } else {
      s = 0;
      double prev = 0, t = std::exp(lbin(R, lo, lq) - lfull);
      for (int j = lo; j <= R; ++j) {
        s += t;
        if (j > lo && t < 1e-22 * s && t <= prev) break;
        prev = t;
        t *= q * (R - j) / (j + 1);
      }
    }
    s *= base;
    int ties = 0;
    for (int i = 0; i < 4; ++i) ties += (L[i] == Lmax);
    s += (1.0 / (1 + T0 + ties) - base) * std::exp(lbin(R, Lmax, lq) - lfull);
    if (s <= 0) return false;
    out = lfull + std::log(s);
    return true;
  }

  double term(int b1, int b2) const {
    ++terms_;
    int R = n_ - U_ - b1 - b2;
    if (R < 0 || b1 < 0 || b2 < 0) return 0;
    if (c_ + a3_ > b1 + b2 || a1_ + a2_ > b1 + b2) return 0;
    int T0 = (c_ + a3_ == b1 + b2) + (a1_ + a2_ == b1 + b2);
    int L[4] = {c_ + a1_ - b2, a2_ + a3_ - b2, c_ + a2_ - b1, a1_ + a3_ - b1};
    long F1 = static_cast<long>(U_) * (b1 + b2) + l3_;
    long F0 = static_cast<long>(U_) * b1 * b2 + b1 * l1_ + b2 * l2_ + K_;
    double s3;
    if (!b3sum(R, F1, T0, L, s3)) return 0;
    return std::exp(ldef_ - lf_[b1] - lf_[b2] - lf_[R] + F0 * ll_ + s3 - lref_);
  }

  double row(int b1, int& start) const {
    double tot = 0, best = -1, prev = 0, first = 0;
    int arg = start, hi = n_ - U_ - b1;
    if (hi < 0) return 0;
    int s0 = std::min(std::max(start, 0), hi);
    bool seen = false;
    for (int b2 = s0; b2 <= hi; ++b2) {
      double t = term(b1, b2);
      if (b2 == s0) first = t;
      tot += t;
      seen |= t > 0;
      if (t > best) best = t, arg = b2;
      if (seen && b2 > s0 && t < tol_ && t <= prev) break;
      prev = t;
    }
    prev = first;
    seen = first > 0;
    for (int b2 = s0 - 1; b2 >= 0; --b2) {
      double t = term(b1, b2);
      tot += t;
      seen |= t > 0;
      if (t > best) best = t, arg = b2;
      if (seen && t < tol_ && t <= prev) break;
      prev = t;
    }
    start = arg;
    return tot;
  }

  double defect() {
    ldef_ = lf_[n_] - lf_[c_] - lf_[a1_] - lf_[a2_] - lf_[a3_];
    l1_ = static_cast<long>(c_ + a1_) * (a2_ + a3_);
    l2_ = static_cast<long>(c_ + a2_) * (a1_ + a3_);
    l3_ = static_cast<long>(c_ + a3_) * (a1_ + a2_);
    K_ = static_cast<long>(c_) * (a1_ * a2_ + a2_ * a3_ + a3_ * a1_) + static_cast<long>(a1_) * a2_ * a3_;
    int b0 = std::max(0, (n_ - U_) / 4), st = b0;
    double tot = 0, prev = 0;
    bool seen = false;
    for (int b1 = b0; b1 <= n_ - U_; ++b1) {
      double r = row(b1, st);
      tot += r;
      seen |= r > 0;
      if (seen && b1 > b0 && r < tol_ && r <= prev) break;
      prev = r;
    }
    st = b0;
    prev = 0;
    seen = false;
    bool first = true;
    for (int b1 = b0 - 1; b1 >= 0; --b1) {
      double r = row(b1, st);
      tot += r;
      seen |= r > 0;
      if (seen && !first && r < tol_ && r <= prev) break;
      first = false;
      prev = r;
    }
    return tot;
  }

  int n_;
  double p_;
  mutable std::uint64_t terms_ = 0;
  double ll_, eps_, shell_tol_, lref_, tol_ = 0;
  std::vector<double> lf_, t1p_;
  int c_ = 0, a1_ = 0, a2_ = 0, a3_ = 0, U_ = 0;
  long l1_ = 0, l2_ = 0, l3_ = 0, K_ = 0;
  double ldef_ = 0;
};

AvgM2 route_plane(int n, double p) {
  require(p > 0 && p < 0.5, "the plane route needs 0 < p < 1/2");
  double z7 = PlaneSum(n, p, 1e-18, 1e-13).run();
  AvgM2 r;
  r.route = CompositionRoute::Plane;
  r.log2_value = std::log2(static_cast<long double>(z7)) - n;
  r.value = std::exp2(r.log2_value);
  return r;
}

// lambda = 0 keeps only f = 0: vertex vectors spanning at most a plane of GF(2)^3.
AvgM2 route_zero_support(int n) {
  BigInt two = BigInt(1) << n, four = two * two;
  BigInt exact_line = two - 1, exact_plane = four - 3 * two + 2;
  BigInt count = 1 + 7 * exact_line + 7 * exact_plane;
  AvgM2 r;
  r.route = CompositionRoute::ZeroSupport;
  r.log2_value = log2_rational(Rational(count)) - 3.0L * n;
  r.value = std::exp2(r.log2_value);
  return r;
}

}  // namespace

AvgM2 avg_m2_p(int n, double p, CompositionRoute route) {
  require(n >= 3, "average moment needs n >= 3");
  require(p >= 0 && p <= 1, "edge probability p must lie in [0, 1]");
  if (route == CompositionRoute::Auto) {
    if (p == 0)
      route = CompositionRoute::Identity;
    else if (n <= 24 || (p == 0.5 && n <= 30))
      route = CompositionRoute::Literal;
    else if (p == 0.5)
      route = n <= 80 ? CompositionRoute::Reduced : CompositionRoute::ZeroSupport;
    else if (p < 0.5)
      route = n <= 40 ? CompositionRoute::Reduced : CompositionRoute::Plane;
    else if (n <= 80)
      route = CompositionRoute::Reduced;
    else
      fail(ErrorKind::Budget, "p > 1/2 needs signed summation; supported up to n = 80");
  }
  switch (route) {
    case CompositionRoute::Identity: {
      require(p == 0, "identity route only applies at p = 0");
      AvgM2 r;
      r.value = 1;
      r.log2_value = 0;
      r.route = route;
      return r;
    }
    case CompositionRoute::Literal:
      if (n > 40) fail(ErrorKind::Budget, "literal composition enumeration supports n <= 40");
      return route_literal(n, p);
    case CompositionRoute::Reduced:
      if (n > 120) fail(ErrorKind::Budget, "reduced composition sum supports n <= 120");
      return route_reduced(n, p);
    case CompositionRoute::Plane: return route_plane(n, p);
    case CompositionRoute::ZeroSupport:
      require(p == 0.5, "zero-support route only applies at p = 1/2");
      return route_zero_support(n);
    case CompositionRoute::Auto: break;
  }
  fail(ErrorKind::InvalidArgument, "unknown route");
}

Rational avg_m2_p_exact(int n, const Rational& p) {
  require(n >= 3 && n <= 16, "exact composition sum supports 3 <= n <= 16");
  require(p >= 0 && p <= 1, "edge probability p must lie in [0, 1]");
  Rational lam = 1 - 2 * p;
  std::int64_t fmax = static_cast<std::int64_t>(n) * (n - 1) * (n - 2) / 6;
  std::vector<Rational> pw(fmax + 1);
  pw[0] = 1;
  for (std::int64_t i = 1; i <= fmax; ++i) pw[i] = pw[i - 1] * lam;
  std::vector<BigInt> fact(n + 1, 1);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  Rational total = 0;
  Kappa k{};
  auto rec = [&](auto&& self, int pos, int left, BigInt denom) -> void {
    if (pos == 7) {
      k[7] = left;
      total += Rational(fact[n] / (denom * fact[left])) * pw[f_kappa(k)];
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[pos] = v;
      self(self, pos + 1, left - v, denom * fact[v]);
    }
  };
  rec(rec, 0, n, BigInt(1));
  return total / Rational(BigInt(1) << (3 * n));
}

EdgeBudget solve_edge_budget(int n, double gamma) {
  require(gamma > 0 && gamma < 1, "gamma must lie in (0, 1)");
  require(n >= 3, "n must be >= 3");
  EdgeBudget out;
  double top = static_cast<double>(-log2_rational(closed_m2_uniform(n)));
  out.target = gamma * top;
  struct Point {
    double p, v;
  };
  std::vector<Point> seen;
  auto eval = [&](double p) {
    AvgM2 a = avg_m2_p(n, p);
    ++out.evaluations;
    out.route = a.route;
    double v = static_cast<double>(-a.log2_value);
    seen.push_back({p, v});
    return v - out.target;
  };
  // Bracket from a density-based guess with expanding geometric steps. Small
  // first steps keep evaluations near the root, where sums are cheapest.
  double guess = std::min(0.25, 20.0 / (static_cast<double>(n) * n));
  double lo = guess, hi = guess;
  double flo = eval(lo), fhi = flo, step = 1.05;
  while (flo > 0 && lo > 1e-300) {
    hi = lo;
    fhi = flo;
    lo /= step;
    step = 1 + 2 * (step - 1);
    flo = eval(lo);
  }
  while (fhi < 0) {
    if (hi >= 0.5) fail(ErrorKind::InvalidArgument, "target unreachable on (0, 1/2]");
    lo = hi;
    flo = fhi;
    hi = std::min(0.5, hi * step);
    step = 1 + 2 * (step - 1);
    fhi = hi == 0.5 ? top - out.target : eval(hi);
  }
  if (flo != 0 && fhi != 0) {
    std::uintmax_t iters = 100;
    auto f = [&](double lp) { return eval(std::exp(lp)); };
    auto tol = [](double a, double b) { return std::fabs(b - a) < 1e-13; };
    boost::math::tools::toms748_solve(f, std::log(lo), std::log(hi), flo, fhi, tol, iters);
  }
  auto best = std::min_element(seen.begin(), seen.end(), [&](const Point& a, const Point& b) {
    return std::fabs(a.v - out.target) < std::fabs(b.v - out.target);
  });
  out.p = best->p;
  out.achieved = best->v;
  // Every evaluated point must respect the monotone order in p.
  std::sort(seen.begin(), seen.end(), [](const Point& a, const Point& b) { return a.p < b.p; });
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].v < seen[i - 1].v - 1e-9)
      fail(ErrorKind::InvalidArgument, "-log2 <m2> is not monotone in p near the root; refusing to report");
  out.expected_edges = out.p * static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
  if (std::fabs(out.achieved - out.target) > 1e-9)
    fail(ErrorKind::InvalidArgument, "edge budget root did not converge to 1e-9 (residual " +
                                         std::to_string(out.achieved - out.target) + ")");
  return out;
}

}  // namespace hgm
