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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdenoise/harness/signals.hpp"
#include "qdenoise/pipeline/denoise.hpp"

namespace qdenoise::harness {

/// One noise setting of an experiment, with its own copy of the denoiser
/// configuration (sections may override any denoiser key).
struct Scenario {
  std::string name;
  pipeline::DenoiseConfig config;
};

struct ExperimentConfig {
  std::string profile = "desk";
  std::uint64_t seed = 1;
  int trials = 50;
  std::vector<pipeline::Method> methods = {pipeline::Method::proposed, pipeline::Method::qft,
                                           pipeline::Method::qwt};
  // Baselines are scored at every fraction; the best mean PSNR is reported.
  std::vector<double> keep_fractions = {0.125, 0.25, 0.5};
  TestSignalSpec signal;
  std::vector<Scenario> scenarios;
  int threads = 0;  // 0: one per hardware thread
  int trace_trial = 0;

  void validate() const;
};

/// Built-in profiles: smoke (m=3, p=2, a=4, b=3), desk (m=5, p=5, a=8, b=5,
/// 50 trials) and full (desk layout, 200 trials). Each comes with the default
/// scenario list. Throws ConfigError for an unknown name.
ExperimentConfig profile_config(std::string_view profile);

/// Parses the key = value format documented in docs/config_format.md.
/// `profile_override` replaces the file's `profile` key. Errors carry
/// `source:line:` prefixes and name the offending key.
ExperimentConfig parse_config(std::istream& in, std::string_view source,
                              std::optional<std::string> profile_override = std::nullopt);

ExperimentConfig load_config(const std::filesystem::path& path,
                             std::optional<std::string> profile_override = std::nullopt);

}  // namespace qdenoise::harness
