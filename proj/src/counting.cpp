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


#include <vector>

#include "ensembles.hpp"

namespace hgm {

namespace {

struct CountingSetup {
  int c, alpha, n;
  std::vector<std::uint32_t> valid;  // even-parity 2*alpha-bit columns
  std::vector<std::vector<int>> edges;
};

CountingSetup setup(int c, int alpha, int n) {
  require(c >= 2 && c <= n, "edge cardinality must satisfy 2 <= c <= n");
  require(alpha >= 1 && alpha <= 8, "alpha must be an integer in [1, 8]");
  CountingSetup s{c, alpha, n, {}, {}};
  for (std::uint32_t t = 0; t < (1u << (2 * alpha)); ++t)
    if (popcount(t) % 2 == 0) s.valid.push_back(t);
  for (Mask e : c_subsets(n, c)) {
    std::vector<int> vs;
    for (Mask r = e; r; r &= r - 1) vs.push_back(__builtin_ctzll(r));
    s.edges.push_back(vs);
  }
  return s;
}

// Constraint bit of one edge: sum over nonempty proper q of e with q inside x
// of parity(AND of the columns outside q).
int edge_value(const std::vector<int>& e, const std::uint32_t* cols, Mask x) {
  int c = static_cast<int>(e.size());
  unsigned pattern = 0;
  for (int i = 0; i < c; ++i) pattern |= static_cast<unsigned>(x >> e[i] & 1) << i;
  unsigned full = (1u << c) - 1;
  int acc = 0;
  for (unsigned q = pattern; q; q = (q - 1) & pattern) {
    if (q == full) continue;
    std::uint32_t prod = ~0u;
    for (int i = 0; i < c; ++i)
      if (!(q >> i & 1)) prod &= cols[e[i]];
    acc ^= popcount(prod) & 1;
  }
  return acc;
}

// Visits every (T, x) with T drawn from the valid columns.
template <class F>
void for_each_T(const CountingSetup& s, F&& body) {
  std::vector<std::size_t> idx(s.n, 0);
  std::vector<std::uint32_t> cols(s.n, s.valid[0]);
  while (true) {
    body(cols.data());
    int i = 0;
    while (i < s.n && ++idx[i] == s.valid.size()) {
      idx[i] = 0;
      cols[i] = s.valid[0];
      ++i;
    }
    if (i == s.n) return;
    cols[i] = s.valid[idx[i]];
  }
}

void check_enum_bits(long bits, const char* what) {
  if (bits > 28)
    fail(ErrorKind::Budget, std::string(what) + ": enumeration of 2^" + std::to_string(bits) +
                                " tuples exceeds the 2^28 budget");
}

}  // namespace

BigInt counting_N(int c, int alpha, int n) {
  auto s = setup(c, alpha, n);
  check_enum_bits(static_cast<long>(2 * alpha) * n, "counting N");
  std::uint64_t count = 0;
  for_each_T(s, [&](const std::uint32_t* cols) {
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
      bool ok = true;
      for (const auto& e : s.edges)
        if (edge_value(e, cols, x)) {
          ok = false;
          break;
        }
      count += ok;
    }
  });
  return BigInt(count);
}

BigInt counting_N_rank(int alpha, int n) {
  auto s = setup(3, alpha, n);
  require(n <= 63, "n too large");
  if (static_cast<long>(2 * alpha - 1) * n > 24)
    fail(ErrorKind::Budget, "rank counting: 2^" + std::to_string((2 * alpha - 1) * n) + " column matrices exceed 2^24");
  BigInt total = 0;
  std::vector<std::uint64_t> per_rank(n + 1, 0);
  for_each_T(s, [&](const std::uint32_t* cols) {
    // Row per 3-edge {i,j,k}: x_i*par(t_j&t_k) + x_j*par(t_i&t_k) + x_k*par(t_i&t_j).
    std::vector<Mask> basis(n, 0);
    int rank = 0;
    for (const auto& e : s.edges) {
      Mask row = 0;
      for (int a = 0; a < 3; ++a) {
        int j = e[(a + 1) % 3], k = e[(a + 2) % 3];
        if (popcount(cols[j] & cols[k]) & 1) row |= Mask{1} << e[a];
      }
      for (int b = n - 1; b >= 0 && row; --b) {
        if (!(row >> b & 1)) continue;
        if (!basis[b]) {
          basis[b] = row;
          ++rank;
          row = 0;
        } else {
          row ^= basis[b];
        }
      }
    }
    ++per_rank[rank];
  });
  for (int r = 0; r <= n; ++r) total += BigInt(per_rank[r]) << (n - r);
  return total;
}

BigInt counting_N_tau(int c, int alpha, int n, int tau) {
  require(tau >= 1, "moment order tau must be >= 1");
  auto s = setup(c, alpha, n);
  check_enum_bits(static_cast<long>(2 * alpha) * n, "counting N^(tau)");
  std::size_t E = s.edges.size();
  if (E > 24) fail(ErrorKind::Budget, "counting N^(tau): 2^" + std::to_string(E) + " edge patterns exceed 2^24");
  // Histogram of per-copy edge-constraint vectors; the tau copies must XOR to 0.
  std::vector<std::int64_t> hist(std::size_t{1} << E, 0);
  for_each_T(s, [&](const std::uint32_t* cols) {
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
      std::size_t v = 0;
      for (std::size_t i = 0; i < E; ++i) v |= static_cast<std::size_t>(edge_value(s.edges[i], cols, x)) << i;
      ++hist[v];
    }
  });
  if (tau == 1) return BigInt(hist[0]);
  for (std::size_t h = 1; h < hist.size(); h <<= 1)
    for (std::size_t i = 0; i < hist.size(); i += h << 1)
      for (std::size_t j = i; j < i + h; ++j) {
        auto a = hist[j], b = hist[j + h];
        hist[j] = a + b;
        hist[j + h] = a - b;
      }
  BigInt acc = 0;
  for (auto v : hist) acc += boost::multiprecision::pow(BigInt(v), tau);
  return acc >> E;
}

BigInt counting_N_tau_literal(int c, int alpha, int n, int tau) {
  require(tau >= 1, "moment order tau must be >= 1");
  auto s = setup(c, alpha, n);
  long copy_bits = static_cast<long>(2 * alpha) * n;
  check_enum_bits(copy_bits * tau, "literal counting N^(tau)");
  // Enumerate tau copies of (T, x) as one odometer over tau*(n+1) digits.
  std::size_t D = s.valid.size();
  std::vector<std::size_t> idx(tau * n, 0);
  std::vector<std::uint32_t> cols(tau * n, s.valid[0]);
  std::vector<Mask> xs(tau, 0);
  std::uint64_t count = 0;
  while (true) {
    for (Mask xall = 0; xall < (Mask{1} << (n * tau)); ++xall) {
      for (int t = 0; t < tau; ++t) xs[t] = (xall >> (t * n)) & ((Mask{1} << n) - 1);
      bool ok = true;
      for (const auto& e : s.edges) {
        int v = 0;
        for (int t = 0; t < tau; ++t) v ^= edge_value(e, cols.data() + t * n, xs[t]);
        if (v) {
          ok = false;
          break;
        }
      }
      count += ok;
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == D) {
      idx[i] = 0;
      cols[i] = s.valid[0];
      ++i;
    }
    if (i == idx.size()) break;
    cols[i] = s.valid[idx[i]];
  }
  return BigInt(count);
}

}  // namespace hgm
