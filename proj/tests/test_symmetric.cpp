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

#include <cmath>

#include "doctest.h"
#include "symmetric.hpp"

using namespace hgm;

TEST_CASE("closed forms at small n") {
  auto a = closed_3complete(3, 2);
  CHECK(a.moment == QSqrt2(Rational(11, 32)));
  CHECK(closed_3complete(3, 0.5).moment == QSqrt2(Rational(15, 8)));
  CHECK(closed_ncomplete(3, 2).moment == QSqrt2(Rational(11, 32)));
  CHECK(closed_ncomplete(3, 0.5).moment == QSqrt2(Rational(15, 8)));
  auto cz2 = closed_ncomplete(2, 2), cz5 = closed_ncomplete(2, 0.5);
  CHECK(cz2.moment == QSqrt2(1));
  CHECK(cz5.moment == QSqrt2(1));
  CHECK(cz2.sre == 0);
  CHECK(cz5.sre == 0);
}

TEST_CASE("closed forms match brute force") {
  for (int n = 3; n <= 10; ++n) {
    for (const auto& g : {c_complete(n, 3), c_complete(n, n)}) {
      auto brute = magic_direct(from_hypergraph(g), {2.0, 0.5});
      auto closed2 = g.edge_count() == 1 && n > 3 ? closed_ncomplete(n, 2) : closed_3complete(n, 2);
      auto closed5 = g.edge_count() == 1 && n > 3 ? closed_ncomplete(n, 0.5) : closed_3complete(n, 0.5);
      CAPTURE(n);
      REQUIRE(closed2.moment.is_rational());
      CHECK(closed2.moment.a == *brute[0].exact_moment);
      CHECK(static_cast<double>(closed5.value) == doctest::Approx(to_double(*brute[1].exact_moment)).epsilon(1e-12));
    }
  }
}

TEST_CASE("reduced spectra match brute force") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& g : {c_complete(n, 3), c_complete(n, n), build(n, {})}) {
      auto classes = reduced_spectrum(g);
      BigInt total = 0;
      for (const auto& e : classes) total += e.cls.multiplicity;
      CHECK(total == BigInt(1) << (2 * n));
      auto brute = magic_direct(from_hypergraph(g), {2.0, 0.5, 3.0});
      for (const auto& b : brute) {
        auto r = reduced_moment(classes, n, b.alpha);
        CHECK(*r.exact_moment == *b.exact_moment);
      }
    }
  }
}

TEST_CASE("identity class and vanishing classes") {
  for (const auto& e : reduced_spectrum(c_complete(5, 3)))
    if (e.cls.m == 0 && e.cls.m1 == 0 && e.cls.m0 == 0) CHECK(e.sq_component == 1);
  for (const auto& e : reduced_spectrum(c_complete(5, 5)))
    if (e.cls.m == 0 && e.cls.m0 >= 1) CHECK(e.sq_component == 0);
}

TEST_CASE("large-n behaviour") {
  CHECK(static_cast<double>(closed_3complete(200, 2).sre) == doctest::Approx(3).epsilon(1e-6));
  CHECK(static_cast<double>(closed_ncomplete(200, 0.5).sre) == doctest::Approx(2 * std::log2(3.0)).epsilon(1e-6));
  double prev = 0;
  for (int n = 2; n <= 40; ++n) {
    double v = static_cast<double>(closed_ncomplete(n, 0.5).sre);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("quadratic surds") {
  auto r2 = QSqrt2::pow2_half(1);
  CHECK(r2 == QSqrt2(0, 1));
  CHECK(r2 * r2 == QSqrt2(2));
  CHECK(QSqrt2::pow2_half(-3) == QSqrt2(0, Rational(1, 4)));
  CHECK(static_cast<double>(QSqrt2(1, 1).value()) == doctest::Approx(1 + std::sqrt(2.0)));
}
