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


#include "hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hgm {

Hypergraph build(int n, std::vector<Mask> edges) {
  require(n >= 1 && n <= 63, "vertex count must be in [1, 63], got " + std::to_string(n));
  Mask all = (Mask{1} << n) - 1;
  for (Mask e : edges) {
    require(e != 0, "hyperedges must be nonempty");
    require((e & ~all) == 0, "hyperedge references a vertex beyond n=" + std::to_string(n));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Hypergraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  return g;
}

std::vector<Mask> c_subsets(int n, int c) {
  std::vector<Mask> out;
  if (c < 1 || c > n) return out;
  // Gosper's hack walks c-subsets in increasing numeric (colex) order.
  Mask v = (Mask{1} << c) - 1, limit = Mask{1} << n;
  while (v < limit) {
    out.push_back(v);
    Mask t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(v) + 1));
  }
  return out;
}

Hypergraph c_complete(int n, int c) {
  require(c >= 1 && c <= n, "edge size c must satisfy 1 <= c <= n");
  return build(n, c_subsets(n, c));
}

DegreeProfile degree_profile(const Hypergraph& g) {
  DegreeProfile d;
  d.per_vertex.assign(g.n(), 0);
  std::vector<Mask> nbr(g.n(), 0);
  for (Mask e : g.edges())
    for (Mask r = e; r; r &= r - 1) nbr[__builtin_ctzll(r)] |= e;
  long total = 0;
  for (int i = 0; i < g.n(); ++i) {
    d.per_vertex[i] = popcount(nbr[i] & ~(Mask{1} << i));
    total += d.per_vertex[i];
  }
  d.average = Rational(total, g.n());
  return d;
}

std::vector<Mask> induced_higher_edges(const Hypergraph& g, Mask x) {
  std::unordered_map<Mask, unsigned char> parity;
  for (Mask e : g.edges()) {
    Mask ex = e & x;
    // q ranges over nonempty submasks of e & x; e \ q is the candidate.
    for (Mask q = ex; q; q = (q - 1) & ex) {
      Mask rest = e & ~q;
      if (popcount(rest) >= 2) parity[rest] ^= 1;
    }
  }
  std::vector<Mask> out;
  for (auto [m, bit] : parity)
    if (bit) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

Hypergraph induced_full(const Hypergraph& g, PauliIndex p) {
  require(((p.x | p.z) & ~g.vertex_mask()) == 0, "Pauli index exceeds n bits");
  Mask ones = p.z;
  for (Mask e : g.edges()) {
    if (popcount(e) < 2) continue;
    for (Mask r = e; r; r &= r - 1) {
      Mask v = r & -r;
      if (((e & ~v) & ~p.x) == 0) ones ^= v;
    }
  }
  std::vector<Mask> edges = induced_higher_edges(g, p.x);
  for (Mask r = ones; r; r &= r - 1) edges.push_back(r & -r);
  return build(g.n(), std::move(edges));
}

Hypergraph induced_star(const Hypergraph& g, PauliIndex p) {
  require(((p.x | p.z) & ~g.vertex_mask()) == 0, "Pauli index exceeds n bits");
  std::vector<Mask> edges = induced_higher_edges(g, p.x);
  for (Mask r = p.z; r; r &= r - 1) edges.push_back(r & -r);
  return build(g.n(), std::move(edges));
}

bool is_permutation_invariant(const Hypergraph& g) {
  std::vector<std::size_t> count(g.n() + 1, 0);
  for (Mask e : g.edges()) ++count[popcount(e)];
  for (int c = 1; c <= g.n(); ++c) {
    if (count[c] == 0) continue;
    long double full = 1;
    for (int i = 0; i < c; ++i) full = full * (g.n() - i) / (i + 1);
    if (static_cast<long double>(count[c]) != full) return false;
  }
  return true;
}

Mask mask_of(const std::vector<int>& vertices) {
  Mask m = 0;
  for (int v : vertices) {
    require(v >= 1 && v <= 63, "vertex index out of range: " + std::to_string(v));
    require(!(m >> (v - 1) & 1), "vertex repeated within an edge: " + std::to_string(v));
    m |= Mask{1} << (v - 1);
  }
  return m;
}

std::vector<int> vertices_of(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
  return out;
}

Hypergraph parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, lineno = 0;
  std::vector<Mask> edges;
  std::set<Mask> seen;
  auto perr = [&](const std::string& msg) {
    fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long> nums;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (...) {
        perr("expected an integer, got '" + tok + "'");
      }
      if (used != tok.size()) perr("expected an integer, got '" + tok + "'");
      nums.push_back(v);
    }
    if (nums.empty()) continue;
    if (n < 0) {
      if (nums.size() != 1) perr("first line must hold only the vertex count");
      if (nums[0] < 1 || nums[0] > 63) perr("vertex count must be in [1, 63]");
      n = static_cast<int>(nums[0]);
      continue;
    }
    Mask m = 0;
    for (long v : nums) {
      if (v < 1 || v > n) perr("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (m >> (v - 1) & 1) perr("vertex " + std::to_string(v) + " repeated within an edge");
      m |= Mask{1} << (v - 1);
    }
    if (!seen.insert(m).second) perr("duplicate hyperedge");
    edges.push_back(m);
  }
  if (n < 0) fail(ErrorKind::Parse, "empty hypergraph description: missing vertex count");
  return build(n, std::move(edges));
}

std::string to_text(const Hypergraph& g) {
  std::ostringstream out;
  out << g.n() << '\n';
  for (Mask e : g.edges()) {
    auto vs = vertices_of(e);
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    out << '\n';
  }
  return out.str();
}

Hypergraph builtin(const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  int n = -1;
  if (colon != std::string::npos) {
    std::string arg = name.substr(colon + 1);
    std::size_t used = 0;
    try {
      n = std::stoi(arg, &used);
    } catch (...) {
      used = 0;
    }
    if (used == 0 || used != arg.size()) fail(ErrorKind::Parse, "bad size in builtin '" + name + "'");
  }
  auto need_n = [&](int lo) {
    if (n < lo) fail(ErrorKind::Parse, "builtin '" + head + "' needs a size >= " + std::to_string(lo) + ", e.g. " + head + ":5");
  };
  if (head == "ccz" && colon == std::string::npos) return build(3, {0b111});
  if (head == "triangle" && colon == std::string::npos) return build(3, {0b011, 0b110, 0b101});
  if (head == "empty") {
    need_n(1);
    return build(n, {});
  }
  if (head == "3complete") {
    need_n(3);
    return c_complete(n, 3);
  }
  if (head == "ncomplete") {
    need_n(1);
    return c_complete(n, n);
  }
  fail(ErrorKind::Parse, "unknown builtin '" + name + "' (known: ccz, triangle, empty:N, 3complete:N, ncomplete:N)");
}

}  // namespace hgm
