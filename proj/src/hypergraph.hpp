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
#include <string>
#include <vector>

#include "common.hpp"

namespace hgm {

using Mask = std::uint64_t;

struct PauliIndex {
  Mask x = 0;
  Mask z = 0;
};

class Hypergraph {
 public:
  Hypergraph() = default;

  int n() const { return n_; }
  const std::vector<Mask>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  Mask vertex_mask() const { return n_ >= 64 ? ~Mask{0} : ((Mask{1} << n_) - 1); }

  bool operator==(const Hypergraph& o) const = default;

  friend Hypergraph build(int n, std::vector<Mask> edges);

 private:
  int n_ = 0;
  std::vector<Mask> edges_;
};

struct DegreeProfile {
  std::vector<int> per_vertex;
  Rational average;
};

Hypergraph build(int n, std::vector<Mask> edges);
Hypergraph c_complete(int n, int c);
DegreeProfile degree_profile(const Hypergraph& g);

// Edges of size >= 2 of the induced hypergraph, shared by both variants.
std::vector<Mask> induced_higher_edges(const Hypergraph& g, Mask x);
Hypergraph induced_full(const Hypergraph& g, PauliIndex p);
Hypergraph induced_star(const Hypergraph& g, PauliIndex p);

// True iff the edge set is a union of complete c-uniform layers.
bool is_permutation_invariant(const Hypergraph& g);

// One-based vertex lists <-> masks.
Mask mask_of(const std::vector<int>& vertices);
std::vector<int> vertices_of(Mask m);

Hypergraph parse_text(const std::string& text);
std::string to_text(const Hypergraph& g);

// ccz, triangle, empty:N, 3complete:N, ncomplete:N
Hypergraph builtin(const std::string& name);

// All c-subsets of [0, n) in colexicographic order.
std::vector<Mask> c_subsets(int n, int c);

}  // namespace hgm
