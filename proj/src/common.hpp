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
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorKind { InvalidArgument, Budget, Parse, Unsupported };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(ErrorKind::InvalidArgument, msg);
}

// Largest n for which a 2^n sign table may be materialized.
int sim_budget();
void set_sim_budget(int n);
void check_budget(int n, const char* what);

// Worker count for data-parallel loops; 0 means hardware concurrency.
int jobs();
void set_jobs(int k);

// Runs body(i) for i in [0, count) on up to jobs() threads. body must only
// write to per-index storage.
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& body);

// Exact conversion of a finite double (always dyadic) to a rational.
Rational to_rational(double v);
double to_double(const Rational& r);
std::string to_string(const Rational& r);

inline int popcount(std::uint64_t v) { return __builtin_popcountll(v); }

}  // namespace hgm
