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

#include "qdenoise/harness/signals.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qdenoise/encoding/signal_io.hpp"
#include "qdenoise/errors.hpp"

namespace qdenoise::harness {

namespace {
constexpr std::pair<std::string_view, SignalKind> kKinds[] = {
    {"piecewise-smooth", SignalKind::piecewise_smooth},
    {"multi-tone", SignalKind::multi_tone},
    {"blocks", SignalKind::blocks},
    {"file", SignalKind::file}};
}  // namespace

SignalKind parse_signal_kind(std::string_view text) {
  for (const auto& [name, kind] : kKinds) {
    if (name == text) return kind;
  }
  throw ConfigError("unknown signal kind '" + std::string(text) + "'");
}

std::string_view to_string(SignalKind kind) {
  for (const auto& [name, k] : kKinds) {
    if (k == kind) return name;
  }
  return "?";
}

void TestSignalSpec::validate() const {
  if (!std::has_single_bit(length)) throw ConfigError("signal length must be a power of two");
  switch (kind) {
    case SignalKind::piecewise_smooth:
      if (window == 0 || length % window != 0) {
        throw ConfigError("signal window must divide the signal length");
      }
      if (max_piece_windows < 1) throw ConfigError("max_piece_windows must be >= 1");
      if (!(texture > 0.0)) throw ConfigError("texture must be > 0");
      break;
    case SignalKind::multi_tone:
      if (tones.size() > 4) throw ConfigError("multi-tone signals take at most 4 tones");
      for (const auto& tone : tones) {
        if (!(tone.amplitude != 0.0 && tone.frequency > 0.0)) {
          throw ConfigError("tones need a nonzero amplitude and a positive frequency");
        }
      }
      break;
    case SignalKind::blocks:
      if (blocks < 2 || length % blocks != 0) {
        throw ConfigError("blocks must be >= 2 and divide the signal length");
      }
      break;
    case SignalKind::file:
      if (file.empty()) throw ConfigError("file signal needs a path");
      break;
  }
}

std::vector<double> generate_signal(const TestSignalSpec& spec, std::mt19937_64& rng) {
  spec.validate();
  const std::uint64_t n = spec.length;
  std::vector<double> y(n, 0.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  switch (spec.kind) {
    case SignalKind::piecewise_smooth: {
      const std::uint64_t windows = n / spec.window;
      std::uniform_int_distribution<int> span(1, spec.max_piece_windows);
      std::uniform_real_distribution<double> freq(0.5, 1.5);
      std::uniform_real_distribution<double> phase(0.0, kTwoPi);
      for (std::uint64_t w = 0; w < windows;) {
        const auto len = static_cast<std::uint64_t>(span(rng));
        const double level = unit(rng);
        const double f = freq(rng);
        const double phi = phase(rng);
        const std::uint64_t start = w * spec.window;
        const std::uint64_t end = std::min(windows, w + len) * spec.window;
        for (std::uint64_t i = start; i < end; ++i) {
          const double t = static_cast<double>(i - start) / static_cast<double>(spec.window);
          y[i] = level + spec.texture * level * std::sin(kTwoPi * f * t + phi);
        }
        w += len;
      }
      break;
    }
    case SignalKind::multi_tone: {
      std::vector<Tone> tones = spec.tones;
      if (tones.empty()) {
        std::uniform_int_distribution<int> count(1, 4);
        std::uniform_int_distribution<int> k(1, 4);
        const int c = count(rng);
        for (int t = 0; t < c; ++t) {
          Tone tone;
          tone.frequency = k(rng);
          tone.amplitude = 0.2 + 0.8 * unit(rng);
          tone.phase = kTwoPi * unit(rng);
          tones.push_back(tone);
        }
      }
      for (std::uint64_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n);
        for (const auto& tone : tones) {
          y[i] += tone.amplitude * std::cos(kTwoPi * tone.frequency * t + tone.phase);
        }
      }
      break;
    }
    case SignalKind::blocks: {
      const std::uint64_t width = n / spec.blocks;
      std::vector<double> levels(spec.blocks);
      for (auto& level : levels) level = unit(rng);
      for (std::uint64_t i = 0; i < n; ++i) y[i] = levels[i / width];
      break;
    }
    case SignalKind::file: {
      y = encoding::read_signal(spec.file);
      if (y.size() != n) {
        throw DimensionError("signal file " + spec.file.string() + " has " +
                             std::to_string(y.size()) + " samples, expected " +
                             std::to_string(n));
      }
      break;
    }
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw DomainError("generated signal has a non-finite sample");
  }
  return y;
}

}  // namespace qdenoise::harness
