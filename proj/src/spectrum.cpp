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


#include "spectrum.hpp"

#include <cmath>
#include <ostream>

namespace hgm {

Rational PauliSpectrum::sq_component(Mask x, Mask z) const {
  return Rational(BigInt(sq_numerator(x, z)), BigInt(1) << (2 * n_));
}

void fwht(std::int32_t* v, int n) {
  std::size_t len = std::size_t{1} << n;
  if (n >= 2) {
    for (std::size_t i = 0; i < len; i += 4) {
      std::int32_t a = v[i] + v[i + 1], b = v[i] - v[i + 1], c = v[i + 2] + v[i + 3], d = v[i + 2] - v[i + 3];
      v[i] = a + c, v[i + 1] = b + d, v[i + 2] = a - c, v[i + 3] = b - d;
    }
  } else if (n == 1) {
    std::int32_t a = v[0], b = v[1];
    v[0] = a + b, v[1] = a - b;
  }
  for (std::size_t h = 4; h < len; h <<= 1)
    for (std::size_t i = 0; i < len; i += h << 1) {
      std::int32_t* __restrict lo = v + i;
      std::int32_t* __restrict hi = v + i + h;
      for (std::size_t j = 0; j < h; ++j) {
        std::int32_t a = lo[j], b = hi[j];
        lo[j] = a + b;
        hi[j] = a - b;
      }
    }
}

std::int64_t component_direct_raw(const PhaseState& state, PauliIndex p) {
  require(((p.x | p.z) >> state.n()) == 0, "Pauli index exceeds n bits");
  std::int64_t acc = 0;
  for (std::uint64_t a = 0; a < state.size(); ++a) {
    bool s = state.sign(a) ^ state.sign(a ^ p.x) ^ (popcount(a & p.z) & 1);
    acc += s ? -1 : 1;
  }
  return acc;
}

Rational component_direct(const PhaseState& state, PauliIndex p) {
  return Rational(BigInt(component_direct_raw(state, p)), BigInt(1) << state.n());
}

Rational component_induced(const Hypergraph& g, PauliIndex p) {
  std::int64_t tr = phase_trace(induced_full(g, p));
  return Rational(BigInt(tr) * tr, BigInt(1) << (2 * g.n()));
}

namespace {

template <class Fill>
void for_each_row(int n, const Fill& fill, const std::function<void(Mask, const std::int32_t*)>& visit) {
  std::uint64_t rows = std::uint64_t{1} << n;
  std::uint64_t blocks = std::min<std::uint64_t>(rows, 64);
  std::uint64_t per = rows / blocks;
  parallel_for(blocks, [&](std::uint64_t b) {
    std::vector<std::int32_t> scratch(rows);
    for (Mask x = b * per; x < (b + 1) * per; ++x) {
      fill(x, scratch.data());
      fwht(scratch.data(), n);
      visit(x, scratch.data());
    }
  });
}

}  // namespace

void for_each_spectrum_row(const PhaseState& state,
                           const std::function<void(Mask x, const std::int32_t* row)>& visit) {
  check_budget(state.n(), "spectrum");
  auto f = state.unpack();
  std::uint64_t len = state.size();
  for_each_row(
      state.n(),
      [&](Mask x, std::int32_t* v) {
        for (std::uint64_t a = 0; a < len; ++a) v[a] = 1 - 2 * (f[a] ^ f[a ^ x]);
      },
      visit);
}

void for_each_star_row(const Hypergraph& g, const std::function<void(Mask x, const std::int32_t* row)>& visit) {
  check_budget(g.n(), "star trace");
  std::uint64_t len = std::uint64_t{1} << g.n();
  for_each_row(
      g.n(),
      [&](Mask x, std::int32_t* v) {
        PhaseState h = phase_table(g.n(), induced_higher_edges(g, x));
        const auto& w = h.words();
        for (std::uint64_t a = 0; a < len; ++a) v[a] = 1 - 2 * static_cast<std::int32_t>(w[a >> 6] >> (a & 63) & 1);
      },
      visit);
}

PauliSpectrum full_spectrum(const PhaseState& state) {
  check_budget(state.n(), "spectrum");
  if (state.n() > kSpectrumTableMaxN)
    fail(ErrorKind::Budget, "full spectrum table: n=" + std::to_string(state.n()) + " exceeds " +
                                std::to_string(kSpectrumTableMaxN) + " (4^n entries); use streamed moments instead");
  int n = state.n();
  std::vector<std::int32_t> raw(std::size_t{1} << (2 * n));
  for_each_spectrum_row(state, [&](Mask x, const std::int32_t* row) {
    std::copy(row, row + (std::size_t{1} << n), raw.begin() + (x << n));
  });
  return PauliSpectrum(n, std::move(raw));
}

namespace {

bool twice_integer(double alpha) { return alpha > 0 && std::floor(2 * alpha) == 2 * alpha && alpha <= 32; }

struct RowSums {
  std::vector<unsigned __int128> small;
  std::vector<BigInt> big;
  std::vector<long double> real;
};

// Neumaier-compensated accumulation.
struct KahanSum {
  long double s = 0, c = 0;
  void add(long double v) {
    long double t = s + v;
    if (std::fabs(s) >= std::fabs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  long double value() const { return s + c; }
};

template <class U>
U row_power_sum(const std::int32_t* row, std::uint64_t len, int e) {
  U acc = 0;
  if (e == 4) {
    for (std::uint64_t z = 0; z < len; ++z) {
      U w = static_cast<U>(static_cast<std::uint32_t>(std::abs(row[z])));
      U w2 = w * w;
      acc += w2 * w2;
    }
    return acc;
  }
  for (std::uint64_t z = 0; z < len; ++z) {
    U w = static_cast<U>(static_cast<std::uint32_t>(std::abs(row[z]))), t = 1;
    for (int k = 0; k < e; ++k) t *= w;
    acc += t;
  }
  return acc;
}

std::vector<PowerSum> power_sums(int n, const std::vector<double>& alphas,
                                 const std::function<void(const std::function<void(Mask, const std::int32_t*)>&)>& rows) {
  for (double a : alphas) require(a > 0 && std::isfinite(a), "alpha must be positive");
  std::size_t k = alphas.size();
  std::uint64_t nrows = std::uint64_t{1} << n;
  std::uint64_t len = nrows;
  std::vector<int> ipow(k, 0);
  std::vector<bool> use128(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    if (twice_integer(alphas[i])) {
      ipow[i] = static_cast<int>(2 * alphas[i]);
      use128[i] = static_cast<long>(ipow[i]) * n + n <= 127;
    }
  }
  std::vector<RowSums> per(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (ipow[i] && use128[i]) per[i].small.assign(nrows, 0);
    if (ipow[i] && !use128[i]) per[i].big.assign(nrows, 0);
    if (!ipow[i]) per[i].real.assign(nrows, 0);
  }
  long double scale = std::ldexp(1.0L, -n);
  rows([&](Mask x, const std::int32_t* row) {
    for (std::size_t i = 0; i < k; ++i) {
      KahanSum ks;
      if (ipow[i] && use128[i]) {
        per[i].small[x] = ipow[i] * n + n <= 63 ? row_power_sum<std::uint64_t>(row, len, ipow[i])
                                                : row_power_sum<unsigned __int128>(row, len, ipow[i]);
      } else if (ipow[i]) {
        BigInt acc = 0;
        for (std::uint64_t z = 0; z < len; ++z)
          if (row[z]) acc += boost::multiprecision::pow(BigInt(std::abs(row[z])), ipow[i]);
        per[i].big[x] = acc;
      }
      if (!ipow[i]) {
        for (std::uint64_t z = 0; z < len; ++z)
          if (row[z]) ks.add(std::pow(std::fabs(row[z] * scale), 2.0L * alphas[i]));
        per[i].real[x] = ks.value();
      }
    }
  });
  std::vector<PowerSum> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    out[i].alpha = alphas[i];
    out[i].exact = ipow[i] != 0;
    KahanSum ks;
    for (std::uint64_t x = 0; x < nrows; ++x) {
      if (!ipow[i]) ks.add(per[i].real[x]);
      if (ipow[i] && use128[i]) {
        unsigned __int128 v = per[i].small[x];
        BigInt b = static_cast<std::uint64_t>(v >> 64);
        b <<= 64;
        b += static_cast<std::uint64_t>(v);
        out[i].int_sum += b;
      } else if (ipow[i]) {
        out[i].int_sum += per[i].big[x];
      }
    }
    out[i].real_sum = ipow[i] ? std::ldexp(out[i].int_sum.convert_to<long double>(), -ipow[i] * n) : ks.value();
  }
  return out;
}

}  // namespace

std::vector<PowerSum> spectrum_power_sums(const PhaseState& state, const std::vector<double>& alphas) {
  return power_sums(state.n(), alphas, [&](const auto& visit) { for_each_spectrum_row(state, visit); });
}

std::vector<PowerSum> star_power_sums(const Hypergraph& g, const std::vector<double>& alphas) {
  return power_sums(g.n(), alphas, [&](const auto& visit) { for_each_star_row(g, visit); });
}

long double star_trace_sum(const Hypergraph& g, double alpha) {
  auto ps = star_power_sums(g, {alpha});
  if (ps[0].exact) return ps[0].int_sum.convert_to<long double>();
  return ps[0].real_sum * std::pow(2.0L, 2.0L * alpha * g.n());
}

void write_spectrum_csv(const PauliSpectrum& spec, std::ostream& out) {
  int n = spec.n();
  out << "# n=" << n << " denominator=4^" << n << "=" << (BigInt(1) << (2 * n)).str() << "\n";
  out << "x,z,sq_component_numerator\n";
  for (Mask x = 0; x < (Mask{1} << n); ++x)
    for (Mask z = 0; z < (Mask{1} << n); ++z) out << x << ',' << z << ',' << spec.sq_numerator(x, z) << '\n';
}

}  // namespace hgm
