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
#include <random>
#include <string_view>
#include <vector>

namespace qdenoise::harness {

enum class SignalKind { piecewise_smooth, multi_tone, blocks, file };

SignalKind parse_signal_kind(std::string_view text);
std::string_view to_string(SignalKind kind);

struct Tone {
  double frequency = 1.0;  // cycles over the whole signal
  double amplitude = 1.0;
  double phase = 0.0;
};

struct TestSignalSpec {
  SignalKind kind = SignalKind::piecewise_smooth;
  std::uint64_t length = 1024;
  // Piecewise-smooth pieces start and end on multiples of `window`.
  std::uint64_t window = 32;
  int max_piece_windows = 3;
  // Relative amplitude of the slow oscillation riding on each piece.
  double texture = 0.25;
  // Multi-tone: fixed tones, or up to four random low-frequency tones if empty.
  std::vector<Tone> tones;
  std::uint64_t blocks = 8;
  std::filesystem::path file;

  void validate() const;
};

/// Deterministic for a given rng state. Piecewise-smooth pieces span 1 to
/// max_piece_windows windows; each has level L ~ U(0, 1) and texture
/// texture * L * sin(2 pi f t / window + phi), f ~ U(0.5, 1.5), t counted from
/// the piece start. Blocks are equal-length constant runs with U(0, 1)
/// levels. Throws ConfigError for invalid specs and DimensionError when a
/// file signal has the wrong length.
std::vector<double> generate_signal(const TestSignalSpec& spec, std::mt19937_64& rng);

}  // namespace qdenoise::harness
