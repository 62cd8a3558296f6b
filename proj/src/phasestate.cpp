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


#include "phasestate.hpp"

#include <algorithm>
#include <unordered_map>

namespace hgm {

PhaseState::PhaseState(int n) : n_(n), words_(((std::uint64_t{1} << n) + 63) / 64, 0) {}

std::vector<std::uint8_t> PhaseState::unpack() const {
  std::vector<std::uint8_t> out(size());
  for (std::uint64_t a = 0; a < size(); ++a) out[a] = sign(a);
  return out;
}

namespace {

constexpr std::uint64_t kLow[6] = {0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
                                   0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

// In-place subset-XOR transform: algebraic normal form -> truth table.
void anf_to_truth(std::vector<std::uint64_t>& w, int n) {
  for (int i = 0; i < std::min(n, 6); ++i)
    for (auto& word : w) word ^= (word & kLow[i]) << (1 << i);
  for (int i = 6; i < n; ++i) {
    std::size_t step = std::size_t{1} << (i - 6);
    for (std::size_t j = 0; j < w.size(); ++j)
      if (j & step) w[j] ^= w[j ^ step];
  }
}

}  // namespace

PhaseState phase_table(int n, const std::vector<Mask>& edges) {
  PhaseState st(n);
  auto& w = st.words();
  for (Mask e : edges) w[e >> 6] ^= std::uint64_t{1} << (e & 63);
  anf_to_truth(w, n);
  return st;
}

PhaseState from_hypergraph(const Hypergraph& g) {
  check_budget(g.n(), "phase table");
  return phase_table(g.n(), g.edges());
}

PhaseState apply_cz(const PhaseState& state, Mask e) {
  require(e != 0, "CZ needs a nonempty edge");
  require(state.n() >= 64 || (e >> state.n()) == 0, "CZ edge exceeds n bits");
  PhaseState out = state;
  // Enumerate supersets of e inside the n-bit cube.
  Mask all = (Mask{1} << state.n()) - 1, free = all & ~e;
  for (Mask r = free;; r = (r - 1) & free) {
    out.flip(e | r);
    if (r == 0) break;
  }
  return out;
}

StabilizerWord stabilizer_word(const Hypergraph& g, Mask s) {
  require((s & ~g.vertex_mask()) == 0, "selector exceeds n bits");
  StabilizerWord w;
  w.s = w.x_part = s;
  std::unordered_map<Mask, unsigned char> parity;
  for (Mask e : g.edges()) {
    Mask es = e & s;
    for (Mask q = es; q; q = (q - 1) & es) {
      Mask rest = e & ~q;
      if (rest == 0)
        w.negated = !w.negated;
      else
        parity[rest] ^= 1;
    }
  }
  for (auto [m, bit] : parity)
    if (bit) w.phase_edges.push_back(m);
  std::sort(w.phase_edges.begin(), w.phase_edges.end());
  return w;
}

PhaseState apply_stabilizer(const PhaseState& state, const StabilizerWord& w) {
  require(state.n() >= 64 || (w.s >> state.n()) == 0, "stabilizer word exceeds n bits");
  PhaseState d = phase_table(state.n(), w.phase_edges);
  PhaseState out(state.n());
  for (std::uint64_t a = 0; a < state.size(); ++a)
    if (state.sign(a) ^ d.sign(a)) out.flip(a ^ w.s);
  out.set_negated(state.negated() ^ w.negated);
  // Keep the amplitude at a = 0 positive so equal vectors compare equal.
  if (out.sign(0)) {
    for (auto& word : out.words()) word = ~word;
    if (out.size() < 64) out.words()[0] &= (std::uint64_t{1} << out.size()) - 1;
    out.set_negated(!out.negated());
  }
  return out;
}

std::int64_t phase_trace(const PhaseState& state) {
  std::int64_t ones = 0;
  for (auto word : state.words()) ones += popcount(word);
  std::int64_t tr = static_cast<std::int64_t>(state.size()) - 2 * ones;
  return state.negated() ? -tr : tr;
}

std::int64_t phase_trace(const Hypergraph& g) { return phase_trace(from_hypergraph(g)); }

}  // namespace hgm
