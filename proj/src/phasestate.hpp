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


#pragma once

#include <cstdint>
#include <vector>

#include "hypergraph.hpp"

namespace hgm {

// Bit-packed table of f(a) over all 2^n basis states, plus a global sign.
class PhaseState {
 public:
  PhaseState() = default;
  explicit PhaseState(int n);

  int n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  bool sign(std::uint64_t a) const { return words_[a >> 6] >> (a & 63) & 1; }
  void flip(std::uint64_t a) { words_[a >> 6] ^= std::uint64_t{1} << (a & 63); }
  bool negated() const { return negated_; }
  void set_negated(bool v) { negated_ = v; }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  // One byte per basis state, for inner loops.
  std::vector<std::uint8_t> unpack() const;

  bool operator==(const PhaseState& o) const = default;

 private:
  int n_ = 0;
  bool negated_ = false;
  std::vector<std::uint64_t> words_;
};

struct StabilizerWord {
  Mask s = 0;
  Mask x_part = 0;
  std::vector<Mask> phase_edges;
  bool negated = false;
};

// Truth table of f(a) = sum_e prod_{i in e} a_i mod 2.
PhaseState phase_table(int n, const std::vector<Mask>& edges);

PhaseState from_hypergraph(const Hypergraph& g);
PhaseState apply_cz(const PhaseState& state, Mask e);
StabilizerWord stabilizer_word(const Hypergraph& g, Mask s);
PhaseState apply_stabilizer(const PhaseState& state, const StabilizerWord& w);
std::int64_t phase_trace(const Hypergraph& g);
std::int64_t phase_trace(const PhaseState& state);

}  // namespace hgm
