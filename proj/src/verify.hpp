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

namespace hgm {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int n = 0;                 // 0 selects the suite default
  std::uint64_t samples = 0; // 0 selects the suite default
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();
std::vector<Check> run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace hgm
