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
#include <functional>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "phasestate.hpp"

namespace hgm {

// Raw amplitudes W(x,z) = sum_a (-1)^{f(a)+f(a^x)+z.a}; the squared
// component is W^2 / 4^n.
class PauliSpectrum {
 public:
  PauliSpectrum() = default;
  PauliSpectrum(int n, std::vector<std::int32_t> raw) : n_(n), raw_(std::move(raw)) {}

  int n() const { return n_; }
  std::int64_t raw(Mask x, Mask z) const { return raw_[(x << n_) | z]; }
  std::uint64_t sq_numerator(Mask x, Mask z) const {
    auto w = raw(x, z);
    return static_cast<std::uint64_t>(w * w);
  }
  Rational sq_component(Mask x, Mask z) const;
  const std::vector<std::int32_t>& raw_table() const { return raw_; }

 private:
  int n_ = 0;
  std::vector<std::int32_t> raw_;
};

// Largest n for which full_spectrum materializes the 4^n table.
constexpr int kSpectrumTableMaxN = 13;

void fwht(std::int32_t* v, int n);

std::int64_t component_direct_raw(const PhaseState& state, PauliIndex p);
Rational component_direct(const PhaseState& state, PauliIndex p);
Rational component_induced(const Hypergraph& g, PauliIndex p);

PauliSpectrum full_spectrum(const PhaseState& state);

// Streams each x-row of raw amplitudes (length 2^n, indexed by z) to visit.
// Rows arrive from worker threads; visit must only touch per-x storage.
void for_each_spectrum_row(const PhaseState& state,
                           const std::function<void(Mask x, const std::int32_t* row)>& visit);

// Same for the traces Tr U(G*_{x,z}) computed from the induced hypergraphs.
void for_each_star_row(const Hypergraph& g, const std::function<void(Mask x, const std::int32_t* row)>& visit);

// Power sums over all (x,z) of |value|^k for k = 2*alpha.
struct PowerSum {
  double alpha = 0;
  bool exact = false;  // set when 2*alpha is an integer
  BigInt int_sum;
  long double real_sum = 0;
};

std::vector<PowerSum> spectrum_power_sums(const PhaseState& state, const std::vector<double>& alphas);
std::vector<PowerSum> star_power_sums(const Hypergraph& g, const std::vector<double>& alphas);
long double star_trace_sum(const Hypergraph& g, double alpha);

void write_spectrum_csv(const PauliSpectrum& spec, std::ostream& out);

}  // namespace hgm
