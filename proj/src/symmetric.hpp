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

#include <vector>

#include "magic.hpp"

namespace hgm {

struct SymmetryClass {
  int m = 0, m1 = 0, m0 = 0;
  BigInt multiplicity;
};

struct ReducedEntry {
  SymmetryClass cls;
  std::int64_t trace = 0;  // Tr U(G_{x,z}) for the class representative
  Rational sq_component;
};

std::vector<ReducedEntry> reduced_spectrum(const Hypergraph& g);
// 2^-n sum over classes of multiplicity * sq^alpha; exact when 2*alpha is an integer.
MagicReport reduced_moment(const std::vector<ReducedEntry>& classes, int n, double alpha);

// a + b*sqrt(2) with rational a, b; keeps half-integer powers of two exact.
struct QSqrt2 {
  Rational a, b;
  QSqrt2() = default;
  QSqrt2(Rational a_, Rational b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
  static QSqrt2 pow2_half(long twice_exponent);
  QSqrt2 operator+(const QSqrt2& o) const { return {a + o.a, b + o.b}; }
  QSqrt2 operator-(const QSqrt2& o) const { return {a - o.a, b - o.b}; }
  QSqrt2 operator*(const QSqrt2& o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
  bool operator==(const QSqrt2& o) const { return a == o.a && b == o.b; }
  bool is_rational() const { return b == 0; }
  long double value() const;
};

struct ClosedValue {
  double alpha = 0;
  QSqrt2 moment;
  long double value = 0;
  long double sre = 0;
};

ClosedValue closed_3complete(int n, double alpha);
ClosedValue closed_ncomplete(int n, double alpha);

}  // namespace hgm
