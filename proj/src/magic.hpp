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

#include <optional>
#include <string>
#include <vector>

#include "spectrum.hpp"

namespace hgm {

enum class Method { DirectSpectrum, StarTrace, ClosedForm };
const char* method_name(Method m);

struct MagicReport {
  double alpha = 0;
  long double pl_moment = 0;
  long double sre = 0;
  Method method = Method::DirectSpectrum;
  std::optional<Rational> exact_moment;  // present when 2*alpha is an integer
};

long double log2_rational(const Rational& r);

long double pl_moment(const PauliSpectrum& spec, double alpha);
Rational pl_moment_exact(const PauliSpectrum& spec, double alpha);
MagicReport sre(const PauliSpectrum& spec, double alpha);

// Streamed variants that never store the 4^n table.
std::vector<MagicReport> magic_direct(const PhaseState& state, const std::vector<double>& alphas);
std::vector<MagicReport> magic_star(const Hypergraph& g, const std::vector<double>& alphas);
MagicReport sre_star(const Hypergraph& g, double alpha);

long double sre_from_moment(long double m, double alpha);
long double degree_bound(const Hypergraph& g, double alpha);
long double robustness_lower_bound(const PauliSpectrum& spec);
long double robustness_lower_bound(const PhaseState& state);

}  // namespace hgm
