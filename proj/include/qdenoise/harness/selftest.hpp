// Copyright 2026 The qdenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace qdenoise::harness {

struct SelftestCase {
  std::string name;
  double worst = 0.0;      // largest deviation observed
  double tolerance = 0.0;  // pass iff worst <= tolerance
  bool passed = false;
  std::string detail;
};

/// Oracle-equivalence properties: circuits against brute-force matrices,
/// amplification against its closed form, the denoisers against classical
/// transform-threshold references, and the compact backend against the full
/// register.
std::vector<SelftestCase> run_selftest(std::uint64_t seed = 1);

}  // namespace qdenoise::harness
